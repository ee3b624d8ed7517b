#include "wzw/lattice.hpp"

#include "wzw/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace wzw {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(static_cast<char>(std::tolower(ch)));
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const std::string& context) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    fail(ErrorKind::Parse, "expected a nonnegative integer in '" + context + "', got '" + s + "'");
  return std::stoi(s);
}

void enumerate_rec(int remaining, std::size_t pos, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (pos == cur.size()) {
    out.push_back(cur);
    return;
  }
  for (int a = 0; a <= remaining; ++a) {
    cur[pos] = a;
    enumerate_rec(remaining - a, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) fail(ErrorKind::InvalidArgument, "group spec needs at least one factor");
  for (const auto& f : factors_) {
    if (f.rank_n < 2) fail(ErrorKind::InvalidArgument, "SU(N) factor needs N >= 2");
    if (f.level < 1) fail(ErrorKind::InvalidArgument, "level must be >= 1");
  }
}

std::string GroupSpec::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " x ";
    os << "su" << factors_[i].rank_n << '@' << factors_[i].level;
  }
  return os.str();
}

GroupSpec parse_group(const std::string& text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) fail(ErrorKind::Parse, "empty group spec");
  std::vector<Factor> factors;
  for (const auto& tok : split(s, 'x')) {
    if (tok.size() < 2 || tok.compare(0, 2, "su") != 0)
      fail(ErrorKind::Parse, "factor '" + tok + "' must look like suN@k");
    const auto at = tok.find('@');
    if (at == std::string::npos) fail(ErrorKind::Parse, "factor '" + tok + "' is missing '@level'");
    Factor f;
    f.rank_n = parse_int(tok.substr(2, at - 2), tok);
    f.level = parse_int(tok.substr(at + 1), tok);
    if (f.rank_n < 2 || f.level < 1) fail(ErrorKind::Parse, "factor '" + tok + "' needs N >= 2 and k >= 1");
    factors.push_back(f);
  }
  return GroupSpec(std::move(factors));
}

std::string WeightLabel::str() const {
  std::ostringstream os;
  for (std::size_t f = 0; f < parts.size(); ++f) {
    if (f) os << ';';
    for (std::size_t i = 0; i < parts[f].size(); ++i) {
      if (i) os << ',';
      os << parts[f][i];
    }
  }
  return os.str();
}

WeightLabel parse_label(const std::string& text) {
  WeightLabel out;
  for (const auto& part : split(strip_spaces(text), ';')) {
    std::vector<int> v;
    for (const auto& tok : split(part, ',')) v.push_back(parse_int(tok, text));
    out.parts.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<int>> enumerate_factor_weights(const Factor& f) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(f.rank_n - 1), 0);
  enumerate_rec(f.level, 0, cur, out);
  return out;
}

std::vector<WeightLabel> enumerate_weights(const GroupSpec& spec) {
  std::vector<WeightLabel> out{WeightLabel{}};
  for (const auto& f : spec.factors()) {
    const auto fw = enumerate_factor_weights(f);
    std::vector<WeightLabel> next;
    next.reserve(out.size() * fw.size());
    for (const auto& prefix : out) {
      for (const auto& w : fw) {
        WeightLabel l = prefix;
        l.parts.push_back(w);
        next.push_back(std::move(l));
      }
    }
    out = std::move(next);
  }
  return out;
}

WeightLabel vacuum(const GroupSpec& spec) {
  WeightLabel l;
  for (const auto& f : spec.factors()) l.parts.emplace_back(static_cast<std::size_t>(f.rank_n - 1), 0);
  return l;
}

bool label_fits(const GroupSpec& spec, const WeightLabel& label) {
  if (label.parts.size() != spec.size()) return false;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const auto& p = label.parts[i];
    if (p.size() != static_cast<std::size_t>(spec[i].rank_n - 1)) return false;
    if (std::any_of(p.begin(), p.end(), [](int a) { return a < 0; })) return false;
    if (std::accumulate(p.begin(), p.end(), 0) > spec[i].level) return false;
  }
  return true;
}

Rational bilinear_form(const std::vector<int>& lambda, const std::vector<int>& mu, int rank_n) {
  const int r = rank_n - 1;
  if (static_cast<int>(lambda.size()) != r || static_cast<int>(mu.size()) != r)
    fail(ErrorKind::InvalidArgument, "weights of SU(" + std::to_string(rank_n) + ") need " + std::to_string(r) +
                                         " Dynkin labels");
  Rational sum = 0;
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      const Rational f = Rational(std::min(i, j)) - Rational(i * j, rank_n);
      sum += f * lambda[static_cast<std::size_t>(i - 1)] * mu[static_cast<std::size_t>(j - 1)];
    }
  }
  return sum;
}

Rational bilinear_form(const GroupSpec& spec, const WeightLabel& lambda, const WeightLabel& mu,
                       std::size_t factor) {
  if (factor >= spec.size() || factor >= lambda.parts.size() || factor >= mu.parts.size())
    fail(ErrorKind::InvalidArgument, "factor index out of range");
  return bilinear_form(lambda.parts[factor], mu.parts[factor], spec[factor].rank_n);
}

Rational casimir(const std::vector<int>& lambda, int rank_n) {
  std::vector<int> shifted(lambda);
  for (auto& a : shifted) a += 2;
  return bilinear_form(lambda, shifted, rank_n) / 2;
}

Rational casimir(const GroupSpec& spec, const WeightLabel& label) {
  Rational sum = 0;
  for (std::size_t f = 0; f < spec.size(); ++f) sum += casimir(label.parts[f], spec[f].rank_n);
  return sum;
}

WeightLabel conjugate(const WeightLabel& label) {
  WeightLabel out = label;
  for (auto& p : out.parts) std::reverse(p.begin(), p.end());
  return out;
}

int nality(const std::vector<int>& lambda, int rank_n) {
  int s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) s += static_cast<int>(i + 1) * lambda[i];
  return s % rank_n;
}

std::vector<int> nality(const GroupSpec& spec, const WeightLabel& label) {
  std::vector<int> out;
  for (std::size_t f = 0; f < spec.size(); ++f) out.push_back(nality(label.parts[f], spec[f].rank_n));
  return out;
}

Rational central_charge(const GroupSpec& spec) {
  Rational c = 0;
  for (const auto& f : spec.factors()) {
    const std::int64_t n = f.rank_n;
    c += Rational(f.level * (n * n - 1), f.level + n);
  }
  return c;
}

Rational conformal_dimension(const GroupSpec& spec, const WeightLabel& label) {
  Rational h = 0;
  for (std::size_t f = 0; f < spec.size(); ++f)
    h += casimir(label.parts[f], spec[f].rank_n) / (spec[f].level + spec[f].rank_n);
  return h;
}

std::vector<int> simple_current(const std::vector<int>& lambda, int level) {
  const int a0 = level - std::accumulate(lambda.begin(), lambda.end(), 0);
  std::vector<int> out(lambda.size());
  if (out.empty()) return out;
  out[0] = a0;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = lambda[i - 1];
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace wzw

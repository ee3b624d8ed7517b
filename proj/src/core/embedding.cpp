#include "wzw/embedding.hpp"

#include "wzw/errors.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace wzw {

namespace {

std::string compact(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

EmbeddingSpec conformal(std::vector<Factor> sub, int ambient_n) {
  EmbeddingSpec e;
  e.kind = EmbeddingKind::ConformalInclusion;
  e.ambient = GroupSpec({Factor{ambient_n, 1}});
  for (const auto& f : sub) e.dynkin.push_back(f.level);
  e.sub = GroupSpec(std::move(sub));
  return e;
}

}  // namespace

std::string to_string(EmbeddingKind kind) {
  switch (kind) {
    case EmbeddingKind::Diagonal: return "diagonal";
    case EmbeddingKind::ConformalInclusion: return "conformal-inclusion";
    case EmbeddingKind::Custom: return "custom";
  }
  return "custom";
}

std::string EmbeddingSpec::name() const { return compact(sub.str()) + ":" + compact(ambient.str()); }

Rational EmbeddingSpec::coset_central_charge() const { return central_charge(ambient) - central_charge(sub); }

std::string LabelPair::str() const { return "(" + ambient.str() + " ; " + sub.str() + ")"; }

std::vector<EmbeddingSpec> catalog(int bound) {
  std::vector<EmbeddingSpec> out;
  for (int n = 4; n * (n - 1) / 2 <= bound; ++n) out.push_back(conformal({Factor{n, n - 2}}, n * (n - 1) / 2));
  for (int n = 2; n * (n + 1) / 2 <= bound; ++n) out.push_back(conformal({Factor{n, n + 2}}, n * (n + 1) / 2));
  for (int m = 2; m * m <= bound; ++m)
    for (int n = m; n * m <= bound; ++n) out.push_back(conformal({Factor{m, n}, Factor{n, m}}, n * m));
  for (const auto& e : out) validate(e);
  return out;
}

EmbeddingSpec custom_inclusion(const GroupSpec& sub, const GroupSpec& ambient) {
  EmbeddingSpec e;
  e.kind = EmbeddingKind::Custom;
  e.ambient = ambient;
  e.sub = sub;
  for (const auto& f : sub.factors()) e.dynkin.push_back(f.level);
  validate(e);
  return e;
}

EmbeddingSpec lookup_inclusion(const std::string& name) {
  const std::string key = compact(name);
  const auto colon = key.find(':');
  if (colon == std::string::npos) fail(ErrorKind::Parse, "inclusion name must be 'sub:ambient', got '" + name + "'");
  const GroupSpec sub = parse_group(key.substr(0, colon));
  const GroupSpec ambient = parse_group(key.substr(colon + 1));
  if (ambient.size() == 1) {
    for (const auto& e : catalog(ambient[0].rank_n))
      if (e.sub == sub && e.ambient == ambient) return e;
  }
  if (ambient.size() != 1 || ambient[0].level != 1 || central_charge(sub) != central_charge(ambient))
    fail(ErrorKind::Parse, "unknown inclusion '" + name + "': not in the catalog and not conformal at level 1");
  return custom_inclusion(sub, ambient);
}

EmbeddingSpec diagonal(int rank_n, int k1, int k2) {
  if (rank_n < 2 || k1 < 1 || k2 < 1) fail(ErrorKind::InvalidArgument, "diagonal needs N >= 2 and levels >= 1");
  EmbeddingSpec e;
  e.kind = EmbeddingKind::Diagonal;
  e.ambient = GroupSpec({Factor{rank_n, k1}, Factor{rank_n, k2}});
  e.sub = GroupSpec({Factor{rank_n, k1 + k2}});
  e.dynkin = {1};
  validate(e);
  return e;
}

EmbeddingSpec classify_coset(const GroupSpec& ambient, const GroupSpec& sub) {
  if (central_charge(ambient) == central_charge(sub))
    fail(ErrorKind::Unsupported, "'" + ambient.str() + " / " + sub.str() +
                                     "' is a conformal pair: the coset is trivial (degenerate)");
  if (ambient.size() == 2 && sub.size() == 1 && ambient[0].rank_n == ambient[1].rank_n &&
      sub[0].rank_n == ambient[0].rank_n && sub[0].level == ambient[0].level + ambient[1].level)
    return diagonal(sub[0].rank_n, ambient[0].level, ambient[1].level);
  fail(ErrorKind::Unsupported, "'" + ambient.str() + " / " + sub.str() +
                                   "' is not a diagonal coset; supply vacuum multiplicities with a table file");
}

void validate(const EmbeddingSpec& spec) {
  const Rational c = spec.coset_central_charge();
  switch (spec.kind) {
    case EmbeddingKind::Diagonal: {
      const auto& a = spec.ambient;
      const auto& s = spec.sub;
      if (a.size() != 2 || s.size() != 1 || a[0].rank_n != a[1].rank_n || s[0].rank_n != a[0].rank_n ||
          s[0].level != a[0].level + a[1].level)
        fail(ErrorKind::Unsupported, "malformed diagonal spec " + spec.name());
      if (c <= Rational(0))
        fail(ErrorKind::Unsupported, "diagonal coset " + spec.name() + " has non-positive central charge " +
                                         format_rational(c));
      break;
    }
    case EmbeddingKind::ConformalInclusion:
    case EmbeddingKind::Custom: {
      if (spec.dynkin.size() != spec.sub.size())
        fail(ErrorKind::InvalidArgument, "one Dynkin index per sub factor required for " + spec.name());
      for (const auto& f : spec.ambient.factors())
        if (f.level != 1) fail(ErrorKind::Unsupported, "conformal inclusions need ambient level 1: " + spec.name());
      for (std::size_t i = 0; i < spec.sub.size(); ++i)
        if (spec.sub[i].level != spec.dynkin[i] * spec.ambient[0].level)
          fail(ErrorKind::InvalidArgument, "sub level does not equal Dynkin index x ambient level in " + spec.name());
      if (c != Rational(0))
        fail(ErrorKind::Unsupported, "central charges differ by " + format_rational(c) + " in " + spec.name());
      break;
    }
  }
}

bool selection_rule(const EmbeddingSpec& spec, const LabelPair& pair) {
  if (spec.kind != EmbeddingKind::Diagonal) fail(ErrorKind::InvalidArgument, "selection rule needs a diagonal spec");
  const int n = spec.sub[0].rank_n;
  const auto amb = nality(spec.ambient, pair.ambient);
  const auto sub = nality(spec.sub, pair.sub);
  return (amb[0] + amb[1]) % n == sub[0];
}

LabelPair apply_simple_current(const EmbeddingSpec& spec, const LabelPair& pair) {
  LabelPair out = pair;
  for (std::size_t f = 0; f < spec.ambient.size(); ++f)
    out.ambient.parts[f] = simple_current(pair.ambient.parts[f], spec.ambient[f].level);
  for (std::size_t f = 0; f < spec.sub.size(); ++f)
    out.sub.parts[f] = simple_current(pair.sub.parts[f], spec.sub[f].level);
  return out;
}

SimpleCurrentOrbit orbit(const EmbeddingSpec& spec, const LabelPair& pair) {
  SimpleCurrentOrbit out{pair};
  for (LabelPair cur = apply_simple_current(spec, pair); cur != pair; cur = apply_simple_current(spec, cur))
    out.push_back(cur);
  return out;
}

SimpleCurrentOrbit vacuum_orbit(const EmbeddingSpec& spec) {
  if (spec.kind != EmbeddingKind::Diagonal) fail(ErrorKind::InvalidArgument, "vacuum orbit needs a diagonal spec");
  auto o = orbit(spec, LabelPair{vacuum(spec.ambient), vacuum(spec.sub)});
  if (static_cast<int>(o.size()) != spec.sub[0].rank_n)
    fail(ErrorKind::Unsupported, "vacuum orbit of " + spec.name() + " has a fixed point");
  return o;
}

void write_embedding(std::ostream& os, const EmbeddingSpec& spec) {
  os << "kind: " << to_string(spec.kind) << '\n';
  os << "ambient: " << spec.ambient.str() << '\n';
  os << "sub: " << spec.sub.str() << '\n';
  os << "dynkin:";
  for (int d : spec.dynkin) os << ' ' << d;
  os << '\n';
}

EmbeddingSpec read_embedding(std::istream& is) {
  EmbeddingSpec e;
  bool have_kind = false, have_amb = false, have_sub = false;
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail(ErrorKind::Parse, "expected 'key: value', got '" + line + "'");
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (key == "kind") {
      if (value == "diagonal")
        e.kind = EmbeddingKind::Diagonal;
      else if (value == "conformal-inclusion")
        e.kind = EmbeddingKind::ConformalInclusion;
      else if (value == "custom")
        e.kind = EmbeddingKind::Custom;
      else
        fail(ErrorKind::Parse, "unknown embedding kind '" + value + "'");
      have_kind = true;
    } else if (key == "ambient") {
      e.ambient = parse_group(value);
      have_amb = true;
    } else if (key == "sub") {
      e.sub = parse_group(value);
      have_sub = true;
    } else if (key == "dynkin") {
      std::istringstream vs(value);
      int d;
      e.dynkin.clear();
      while (vs >> d) e.dynkin.push_back(d);
      if (!vs.eof()) fail(ErrorKind::Parse, "bad dynkin list '" + value + "'");
    } else {
      fail(ErrorKind::Parse, "unknown key '" + key + "'");
    }
  }
  if (!have_kind || !have_amb || !have_sub) fail(ErrorKind::Parse, "embedding spec needs kind, ambient and sub");
  validate(e);
  return e;
}

}  // namespace wzw

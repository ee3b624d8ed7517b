#include "wzw/branching.hpp"

#include "wzw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace wzw {

namespace mp = boost::multiprecision;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_integer(const Rational& q) { return q.denominator() == 1; }

std::size_t find_label(const std::vector<WeightLabel>& labels, const WeightLabel& l) {
  const auto it = std::lower_bound(labels.begin(), labels.end(), l);
  if (it == labels.end() || *it != l) fail(ErrorKind::InvalidArgument, "label " + l.str() + " out of range");
  return static_cast<std::size_t>(it - labels.begin());
}

// Reduced row echelon form in place; returns pivot columns (one per pivot row).
std::vector<std::size_t> rref(std::vector<std::vector<Real>>& a, const Real& tol) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = r;
    for (std::size_t i = r + 1; i < rows; ++i)
      if (mp::abs(a[i][c]) > mp::abs(a[best][c])) best = i;
    if (mp::abs(a[best][c]) <= tol) continue;
    std::swap(a[r], a[best]);
    const Real p = a[r][c];
    for (auto& x : a[r]) x /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Real f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::string describe(const BranchingTable& t) {
  std::ostringstream os;
  for (const auto& p : t.exp()) os << ' ' << p.str() << "->" << t.at(p);
  return os.str();
}

// --- q-series in two variables: grade -> (SU(2) weight -> coefficient) ----

using Laurent = std::map<int, std::int64_t>;

void add_scaled(Laurent& acc, const Laurent& x, std::int64_t scale, int shift) {
  for (const auto& [w, c] : x) {
    auto& slot = acc[w + shift];
    slot += scale * c;
    if (slot == 0) acc.erase(w + shift);
  }
}

Laurent multiply(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      auto& slot = out[wa + wb];
      slot += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

GradedWeights multiply(const GradedWeights& a, const GradedWeights& b, int truncation) {
  GradedWeights out(static_cast<std::size_t>(truncation + 1));
  for (int g = 0; g <= truncation; ++g)
    for (int h = 0; h <= g; ++h) {
      const Laurent prod = multiply(a[static_cast<std::size_t>(h)], b[static_cast<std::size_t>(g - h)]);
      add_scaled(out[static_cast<std::size_t>(g)], prod, 1, 0);
    }
  return out;
}

// f / (z - 1/z) for f antisymmetric under z -> 1/z.
Laurent divide_by_weyl_denominator(const Laurent& f) {
  Laurent g;
  if (f.empty()) return g;
  const int top = f.rbegin()->first;
  // f_w = g_{w-1} - g_{w+1}, solved from the top weight down.
  for (int w = top; w >= -top + 2; --w) {
    const auto fw = f.find(w);
    const auto above = g.find(w + 1);
    const std::int64_t v = (fw == f.end() ? 0 : fw->second) + (above == g.end() ? 0 : above->second);
    if (v != 0) g[w - 1] = v;
  }
  Laurent check;
  add_scaled(check, g, 1, 1);
  add_scaled(check, g, -1, -1);
  if (check != f) fail(ErrorKind::Precision, "character numerator is not divisible by the Weyl denominator");
  return g;
}

// Finite SU(2) content of a symmetric weight multiset: highest weight -> multiplicity.
std::map<int, std::int64_t> decompose_finite(const Laurent& f) {
  std::map<int, std::int64_t> out;
  for (const auto& [w, c] : f) {
    if (w < 0) continue;
    const auto up = f.find(w + 2);
    const std::int64_t mult = c - (up == f.end() ? 0 : up->second);
    if (mult != 0) out[w] = mult;
  }
  return out;
}

}  // namespace

// --- BranchingTable ----------------------------------------------------------

BranchingTable BranchingTable::zeros(const GroupSpec& ambient, const GroupSpec& sub) {
  BranchingTable t;
  t.ambient = ambient;
  t.sub = sub;
  t.rows = enumerate_weights(ambient);
  t.cols = enumerate_weights(sub);
  t.entries.assign(t.rows.size() * t.cols.size(), 0);
  return t;
}

int BranchingTable::at(const LabelPair& p) const { return at(find_label(rows, p.ambient), find_label(cols, p.sub)); }

int& BranchingTable::at(const LabelPair& p) { return at(find_label(rows, p.ambient), find_label(cols, p.sub)); }

std::vector<LabelPair> BranchingTable::exp() const {
  std::vector<LabelPair> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t a = 0; a < cols.size(); ++a)
      if (at(i, a) != 0) out.push_back({rows[i], cols[a]});
  return out;
}

void check_table(const BranchingTable& t) {
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t a = 0; a < t.cols.size(); ++a)
      if (t.at(i, a) < 0)
        fail(ErrorKind::InvalidArgument, "negative multiplicity at " + LabelPair{t.rows[i], t.cols[a]}.str());
  if (t.entries.empty() || t.at(0, 0) != 1) fail(ErrorKind::InvalidArgument, "vacuum multiplicity must be 1");
  if (central_charge(t.ambient) == central_charge(t.sub)) {
    for (const auto& p : t.exp())
      if (!is_integer(conformal_dimension(t.sub, p.sub) - conformal_dimension(t.ambient, p.ambient)))
        fail(ErrorKind::InvalidArgument, "entry " + p.str() + " violates the conformal-weight congruence");
  }
}

// --- commutant solver --------------------------------------------------------

SolverResult solve_conformal_inclusion(const EmbeddingSpec& spec, const ModularData& g, const ModularData& h,
                                       const SolverOptions& opts) {
  if (spec.kind == EmbeddingKind::Diagonal || !spec.is_conformal())
    fail(ErrorKind::InvalidArgument, "the commutant solver needs a conformal inclusion, got " + spec.name());
  if (g.spec != spec.ambient || h.spec != spec.sub)
    fail(ErrorKind::InvalidArgument, "modular data does not match " + spec.name());
  PrecisionGuard guard(std::max(g.digits, h.digits));
  const std::size_t ng = g.size(), nh = h.size();

  // Unknowns: entries with Delta_alpha - Delta_i integral. This is the T
  // intertwining condition, evaluated on exact rationals.
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t a = 0; a < nh; ++a)
      if (is_integer(h.delta[a] - g.delta[i])) vars.emplace_back(i, a);
  const std::size_t nv = vars.size();

  // S B - B S' = 0, split into real and imaginary rows.
  std::vector<std::vector<Real>> eq(2 * ng * nh, std::vector<Real>(nv, Real(0)));
  for (std::size_t v = 0; v < nv; ++v) {
    const auto [j, alpha] = vars[v];
    for (std::size_t i = 0; i < ng; ++i) {
      const std::size_t row = 2 * (i * nh + alpha);
      eq[row][v] += g.S(i, j).re;
      eq[row + 1][v] += g.S(i, j).im;
    }
    for (std::size_t beta = 0; beta < nh; ++beta) {
      const std::size_t row = 2 * (j * nh + beta);
      eq[row][v] -= h.S(alpha, beta).re;
      eq[row + 1][v] -= h.S(alpha, beta).im;
    }
  }
  Real scale = 0;
  for (const auto& r : eq)
    for (const auto& x : r) scale = std::max(scale, Real(mp::abs(x)));
  const auto pivots = rref(eq, scale * Real(opts.pivot_tol));

  std::vector<bool> is_pivot(nv, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_vars;
  for (std::size_t v = 0; v < nv; ++v)
    if (!is_pivot[v]) free_vars.push_back(v);

  SolverResult res;
  res.support_size = nv;
  res.nullspace_dim = free_vars.size();

  // x_pivot = -sum_f R[row][f] x_f
  std::vector<std::vector<double>> coef(pivots.size(), std::vector<double>(free_vars.size()));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t f = 0; f < free_vars.size(); ++f) coef[r][f] = -to_double(eq[r][free_vars[f]]);

  const std::size_t vac_var = 0;  // (vac, vac) is always the first Delta-congruent pair
  const int bound = opts.entry_bound;
  std::vector<int> x(free_vars.size(), 0);
  std::vector<bool> fixed(free_vars.size(), false);
  for (std::size_t f = 0; f < free_vars.size(); ++f)
    if (free_vars[f] == vac_var) {
      x[f] = 1;
      fixed[f] = true;
    }
  double combos = 1;
  for (std::size_t f = 0; f < free_vars.size(); ++f)
    if (!fixed[f]) combos *= bound + 1;
  if (combos > 2e7)
    fail(ErrorKind::Infeasible, "intertwiner space of " + spec.name() + " has dimension " +
                                    std::to_string(free_vars.size()) + ", too large to enumerate");

  std::vector<BranchingTable> solutions;
  std::vector<int> full(nv, 0);
  while (true) {
    ++res.candidates;
    bool ok = true;
    for (std::size_t f = 0; f < free_vars.size(); ++f) full[free_vars[f]] = x[f];
    for (std::size_t r = 0; r < pivots.size() && ok; ++r) {
      double val = 0;
      for (std::size_t f = 0; f < free_vars.size(); ++f) val += coef[r][f] * x[f];
      const long rounded = std::lround(val);
      if (std::abs(val - static_cast<double>(rounded)) > 1e-6 || rounded < 0 || rounded > bound) ok = false;
      full[pivots[r]] = static_cast<int>(rounded);
    }
    if (ok && full[vac_var] == 1) {
      BranchingTable t = BranchingTable::zeros(spec.ambient, spec.sub);
      for (std::size_t v = 0; v < nv; ++v) t.at(vars[v].first, vars[v].second) = full[v];
      solutions.push_back(std::move(t));
    }
    // odometer over the free, unfixed variables
    std::size_t f = 0;
    for (; f < x.size(); ++f) {
      if (fixed[f]) continue;
      if (++x[f] <= bound) break;
      x[f] = 0;
    }
    if (f == x.size()) break;
  }

  if (solutions.empty())
    fail(ErrorKind::Infeasible, "no nonnegative integer branching table for " + spec.name() + " with entries <= " +
                                    std::to_string(bound));
  // Tables related by charge conjugation of the ambient labels describe the
  // same embedding; keep the lexicographically greatest as representative.
  if (solutions.size() == 2) {
    BranchingTable conj = solutions[0];
    for (std::size_t i = 0; i < ng; ++i)
      for (std::size_t a = 0; a < nh; ++a) conj.at(g.conj[i], a) = solutions[0].at(i, a);
    if (conj == solutions[1]) {
      if (solutions[0].entries < solutions[1].entries) std::swap(solutions[0], solutions[1]);
      solutions.pop_back();
      res.conjugate_solutions = 2;
    }
  }
  if (solutions.size() > 1) {
    std::ostringstream os;
    os << solutions.size() << " admissible branching tables for " << spec.name() << ':';
    for (const auto& s : solutions) os << "\n  " << describe(s);
    fail(ErrorKind::Ambiguous, os.str());
  }

  res.table = std::move(solutions.front());
  CMatrix b(ng, nh);
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t a = 0; a < nh; ++a) b(i, a) = Cplx(Real(res.table.at(i, a)));
  res.s_residual = to_double(max_abs(g.S * b - b * h.S));
  Real t_res = 0;
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t a = 0; a < nh; ++a)
      if (res.table.at(i, a)) t_res = std::max(t_res, Real(abs(g.T[i] - h.T[a]) * res.table.at(i, a)));
  res.t_residual = to_double(t_res);
  return res;
}

BranchingTable diagonal_vacuum_multiplicities(const EmbeddingSpec& spec) {
  BranchingTable t = BranchingTable::zeros(spec.ambient, spec.sub);
  for (const auto& p : vacuum_orbit(spec)) t.at(p) = 1;
  return t;
}

// --- q-series ----------------------------------------------------------------

bool QSeries::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
}

std::map<Rational, std::int64_t> QSeries::terms_through(const Rational& limit) const {
  std::map<Rational, std::int64_t> out;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const Rational e = offset + static_cast<std::int64_t>(n);
    if (e > limit) break;
    if (coeffs[n] != 0) out[e] = coeffs[n];
  }
  return out;
}

bool series_equal(const QSeries& a, const QSeries& b) {
  const auto la = static_cast<std::int64_t>(a.coeffs.size()) - 1;
  const auto lb = static_cast<std::int64_t>(b.coeffs.size()) - 1;
  const Rational limit = std::min(a.offset + la, b.offset + lb);
  return a.terms_through(limit) == b.terms_through(limit);
}

std::vector<GradedWeights> su2_characters(int k, int truncation) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "level must be >= 1");
  if (truncation < 0 || truncation > kMaxTruncation)
    fail(ErrorKind::InvalidArgument, "truncation grade must lie in [0, " + std::to_string(kMaxTruncation) + "]");
  const auto grades = static_cast<std::size_t>(truncation + 1);

  // 1 / prod_{j>=1} (1 - q^j)(1 - q^j z^2)(1 - q^j z^-2), through the truncation grade.
  GradedWeights inv(grades);
  inv[0][0] = 1;
  for (int j = 1; j <= truncation; ++j)
    for (int shift : {0, 2, -2})
      for (int g = j; g <= truncation; ++g)
        add_scaled(inv[static_cast<std::size_t>(g)], inv[static_cast<std::size_t>(g - j)], 1, shift);

  const int big_k = k + 2;
  std::vector<GradedWeights> out;
  for (int lambda = 0; lambda <= k; ++lambda) {
    const int m = lambda + 1;
    // sum_n q^{K n^2 + m n} z^{m + 2Kn} - q^{K n^2 - m n} z^{-m + 2Kn}
    GradedWeights num(grades);
    for (int n = -truncation; n <= truncation; ++n) {
      const long gp = static_cast<long>(big_k) * n * n + static_cast<long>(m) * n;
      const long gm = static_cast<long>(big_k) * n * n - static_cast<long>(m) * n;
      if (gp >= 0 && gp <= truncation) num[static_cast<std::size_t>(gp)][m + 2 * big_k * n] += 1;
      if (gm >= 0 && gm <= truncation) num[static_cast<std::size_t>(gm)][-m + 2 * big_k * n] -= 1;
    }
    for (auto& g : num) std::erase_if(g, [](const auto& kv) { return kv.second == 0; });
    GradedWeights prod = multiply(num, inv, truncation);
    GradedWeights chi(grades);
    for (std::size_t g = 0; g < grades; ++g) {
      chi[g] = divide_by_weyl_denominator(prod[g]);
      for (const auto& [w, c] : chi[g])
        if (c < 0) fail(ErrorKind::Precision, "negative weight multiplicity in SU(2) character");
    }
    out.push_back(std::move(chi));
  }
  return out;
}

OracleResult su2_diagonal_branching_oracle(int k1, int k2, int truncation) {
  OracleResult res;
  res.spec = diagonal(2, k1, k2);
  res.truncation = truncation;
  const int kh = k1 + k2;
  const auto c1 = su2_characters(k1, truncation);
  const auto c2 = su2_characters(k2, truncation);
  const auto ch = su2_characters(kh, truncation);
  const auto grades = static_cast<std::size_t>(truncation + 1);
  auto label = [](int a) { return WeightLabel{{{a}}}; };
  auto pair_label = [](int a, int b) { return WeightLabel{{{a}, {b}}}; };

  for (int l1 = 0; l1 <= k1; ++l1)
    for (int l2 = 0; l2 <= k2; ++l2) {
      GradedWeights rest = multiply(c1[static_cast<std::size_t>(l1)], c2[static_cast<std::size_t>(l2)], truncation);
      std::vector<std::vector<std::int64_t>> coeff(static_cast<std::size_t>(kh + 1),
                                                   std::vector<std::int64_t>(grades, 0));
      for (std::size_t g = 0; g < grades; ++g) {
        for (const auto& [w, mult] : decompose_finite(rest[g])) {
          if (w > kh || mult < 0) {
            std::ostringstream os;
            os << "branching elimination failed for (" << l1 << ',' << l2 << ") at grade " << g << ", weight " << w;
            fail(ErrorKind::Precision, os.str());
          }
          coeff[static_cast<std::size_t>(w)][g] = mult;
          // remove mult * q^g chi_w from the remaining grades
          const auto& chi = ch[static_cast<std::size_t>(w)];
          for (std::size_t h = g; h < grades; ++h) add_scaled(rest[h], chi[h - g], -mult, 0);
        }
        if (!rest[g].empty()) fail(ErrorKind::Precision, "branching elimination left a remainder");
      }
      const Rational base = conformal_dimension(GroupSpec({Factor{2, k1}}), label(l1)) +
                            conformal_dimension(GroupSpec({Factor{2, k2}}), label(l2));
      for (int b = 0; b <= kh; ++b) {
        QSeries s;
        s.offset = base - conformal_dimension(GroupSpec({Factor{2, kh}}), label(b));
        s.coeffs = coeff[static_cast<std::size_t>(b)];
        const LabelPair p{pair_label(l1, l2), label(b)};
        if (!s.is_zero()) res.support.insert(p);
        res.branching.emplace(p, std::move(s));
      }
    }

  const QSeries& vac = res.branching.at(LabelPair{pair_label(0, 0), label(0)});
  for (const auto& [p, s] : res.branching)
    if (!s.is_zero() && series_equal(s, vac)) res.vacuum_equal.insert(p);

  std::set<LabelPair> rule;
  for (const auto& [p, s] : res.branching)
    if (selection_rule(res.spec, p)) rule.insert(p);
  res.support_matches_selection_rule = rule == res.support;

  const auto orb = vacuum_orbit(res.spec);
  res.vacuum_equal_matches_orbit = std::set<LabelPair>(orb.begin(), orb.end()) == res.vacuum_equal;
  return res;
}

// --- table files -------------------------------------------------------------

void write_table(std::ostream& os, const BranchingTable& t) {
  os << "ambient: " << t.ambient.str() << '\n';
  os << "sub: " << t.sub.str() << '\n';
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t a = 0; a < t.cols.size(); ++a)
      if (const int m = t.at(i, a)) os << t.rows[i].str() << " ; " << t.cols[a].str() << " ; " << m << '\n';
}

BranchingTable read_table(std::istream& is) {
  std::string line;
  std::vector<std::string> body;
  GroupSpec ambient, sub;
  bool have_amb = false, have_sub = false;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("ambient:", 0) == 0) {
      ambient = parse_group(line.substr(8));
      have_amb = true;
    } else if (line.rfind("sub:", 0) == 0) {
      sub = parse_group(line.substr(4));
      have_sub = true;
    } else {
      body.push_back(std::to_string(lineno) + '\n' + line);
    }
  }
  if (!have_amb || !have_sub) fail(ErrorKind::Parse, "table needs 'ambient:' and 'sub:' header lines");

  BranchingTable t = BranchingTable::zeros(ambient, sub);
  std::set<LabelPair> seen;
  for (const auto& entry : body) {
    const auto nl = entry.find('\n');
    const std::string where = "line " + entry.substr(0, nl);
    const std::string row = entry.substr(nl + 1);
    std::vector<std::string> fields;
    std::stringstream ss(row);
    std::string f;
    while (std::getline(ss, f, ';')) fields.push_back(trim(f));
    if (fields.size() != ambient.size() + sub.size() + 1)
      fail(ErrorKind::Parse, where + ": expected " + std::to_string(ambient.size() + sub.size() + 1) +
                                 " ';'-separated fields");
    LabelPair p;
    for (std::size_t i = 0; i < ambient.size(); ++i) p.ambient.parts.push_back(parse_label(fields[i]).parts[0]);
    for (std::size_t i = 0; i < sub.size(); ++i)
      p.sub.parts.push_back(parse_label(fields[ambient.size() + i]).parts[0]);
    if (!label_fits(ambient, p.ambient) || !label_fits(sub, p.sub))
      fail(ErrorKind::Parse, where + ": label outside the level-restricted range");
    const std::string& ms = fields.back();
    long m = 0;
    try {
      std::size_t used = 0;
      m = std::stol(ms, &used);
      if (used != ms.size()) throw std::invalid_argument(ms);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, where + ": bad multiplicity '" + ms + "'");
    }
    if (!seen.insert(p).second) fail(ErrorKind::Parse, where + ": duplicate entry " + p.str());
    t.at(p) = static_cast<int>(m);
  }
  check_table(t);
  return t;
}

BranchingTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open table file '" + path + "'");
  return read_table(in);
}

void save_table(const std::string& path, const BranchingTable& table) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Io, "cannot write table file '" + path + "'");
  write_table(out, table);
}

}  // namespace wzw

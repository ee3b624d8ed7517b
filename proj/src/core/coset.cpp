#include "wzw/coset.hpp"

#include "wzw/errors.hpp"

#include <algorithm>
#include <set>

namespace wzw {

namespace mp = boost::multiprecision;

bool ExpSet::contains(const LabelPair& p) const { return std::binary_search(pairs.begin(), pairs.end(), p); }

ExpSet exp_set(const EmbeddingSpec& spec) {
  ExpSet out;
  for (const auto& a : enumerate_weights(spec.ambient))
    for (const auto& s : enumerate_weights(spec.sub))
      if (selection_rule(spec, LabelPair{a, s})) out.pairs.push_back({a, s});
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

ExpSet exp_set(const OracleResult& oracle) {
  ExpSet out;
  out.pairs.assign(oracle.support.begin(), oracle.support.end());
  out.proxy = false;
  return out;
}

std::map<LabelPair, Real> kw_b(const BranchingTable& m, const ModularData& g, const ModularData& h, double tol,
                               double* max_imag) {
  if (m.rows != g.labels || m.cols != h.labels)
    fail(ErrorKind::InvalidArgument, "multiplicity table does not match the modular data");
  PrecisionGuard guard(std::max(g.digits, h.digits));
  CMatrix mm(m.rows.size(), m.cols.size());
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (std::size_t a = 0; a < m.cols.size(); ++a)
      if (m.at(i, a)) mm(i, a) = Cplx(Real(m.at(i, a)));
  const CMatrix b = g.S * mm * h.S.adjoint();

  std::map<LabelPair, Real> out;
  Real worst = 0;
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (std::size_t a = 0; a < m.cols.size(); ++a) {
      worst = std::max(worst, Real(mp::abs(b(i, a).im)));
      out.emplace(LabelPair{m.rows[i], m.cols[a]}, b(i, a).re);
    }
  if (max_imag) *max_imag = to_double(worst);
  if (worst >= tol) fail(ErrorKind::Precision, "b(i,alpha) has an imaginary part of " + format17(worst));
  return out;
}

bool CosetReport::pass() const {
  return kw_pass && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

void kw_check(CosetReport& r) {
  r.witnesses.clear();
  if (r.exp.pairs.empty()) r.warnings.push_back("exp is empty; positivity holds vacuously");
  for (const auto& p : r.exp.pairs) {
    const Real& v = r.b.at(p);
    if (!(v > r.tol)) r.witnesses.push_back(p.str() + " b = " + format17(v));
  }
  r.kw_pass = r.witnesses.empty();
}

void coset_dims(CosetReport& r) {
  const LabelPair vac{vacuum(r.spec.ambient), vacuum(r.spec.sub)};
  r.b_vac = r.b.at(vac);
  if (!(r.b_vac > r.tol)) fail(ErrorKind::Precision, "b(vac,vac) = " + format17(r.b_vac) + " is not positive");
  r.dims.clear();
  for (const auto& p : r.exp.pairs) r.dims.emplace(p, r.b.at(p) / r.b_vac);
}

Real dgh_sq(const CosetReport& r, const std::vector<Real>& sub_dims) {
  const auto sub_labels = enumerate_weights(r.spec.sub);
  if (sub_dims.size() != sub_labels.size()) fail(ErrorKind::InvalidArgument, "one quantum dimension per sub label");
  const WeightLabel vac = vacuum(r.spec.ambient);
  Real sum = 0;
  for (std::size_t a = 0; a < sub_labels.size(); ++a) {
    const LabelPair p{vac, sub_labels[a]};
    if (!r.exp.contains(p)) continue;
    const auto it = r.dims.find(p);
    if (it == r.dims.end()) fail(ErrorKind::InvalidArgument, "missing coset dimension for " + p.str());
    sum += it->second * sub_dims[a];
  }
  return sum;
}

Real dgh_sq_conformal(const BranchingTable& t, const std::vector<Real>& sub_dims) {
  if (sub_dims.size() != t.cols.size()) fail(ErrorKind::InvalidArgument, "one quantum dimension per sub label");
  Real sum = 0;
  for (std::size_t a = 0; a < t.cols.size(); ++a) sum += t.at(0, a) * sub_dims[a];
  return sum;
}

Real mu_coset(const EmbeddingSpec& spec, const Real& d2, const Real& mu_g, const Real& mu_h) {
  if (spec.is_conformal())
    fail(ErrorKind::Unsupported, spec.name() + " is a conformal pair; its coset is trivial (degenerate)");
  return d2 * d2 * mu_g / mu_h;
}

Rational coset_central_charge(const EmbeddingSpec& spec) { return spec.coset_central_charge(); }

CosetReport analyze_coset(const EmbeddingSpec& spec, const CosetOptions& opts) {
  if (spec.kind != EmbeddingKind::Diagonal)
    fail(ErrorKind::Unsupported, spec.name() + " is not a diagonal coset (degenerate or unsupported)");
  validate(spec);
  PrecisionGuard guard(opts.digits);

  CosetReport r;
  r.spec = spec;
  r.tol = opts.tol;
  r.c_coset = coset_central_charge(spec);
  r.exp = exp_set(spec);
  if (opts.oracle_truncation) {
    if (spec.sub[0].rank_n != 2) fail(ErrorKind::Unsupported, "the character oracle covers SU(2) only");
    const auto oracle = su2_diagonal_branching_oracle(spec.ambient[0].level, spec.ambient[1].level,
                                                      *opts.oracle_truncation);
    const ExpSet truth = exp_set(oracle);
    if (truth.pairs != r.exp.pairs) r.warnings.push_back("selection-rule exp differs from the character oracle");
    r.exp = truth;
  }

  const int n = spec.sub[0].rank_n;
  std::set<LabelPair> seen;
  std::vector<SimpleCurrentOrbit> orbits;
  for (const auto& p : r.exp.pairs) {
    if (seen.count(p)) continue;
    auto o = orbit(spec, p);
    if (static_cast<int>(o.size()) != n)
      fail(ErrorKind::Unsupported, "field identification in " + spec.name() + " has a fixed point at " + p.str());
    seen.insert(o.begin(), o.end());
    orbits.push_back(std::move(o));
  }
  r.identified_sectors = orbits.size();

  const ModularData g = kac_peterson(spec.ambient, opts.digits, opts.tol);
  const ModularData h = kac_peterson(spec.sub, opts.digits, opts.tol);
  const BranchingTable m = opts.multiplicities ? *opts.multiplicities : diagonal_vacuum_multiplicities(spec);
  if (m.ambient != spec.ambient || m.sub != spec.sub)
    fail(ErrorKind::InvalidArgument, "multiplicity table is for " + m.ambient.str() + " / " + m.sub.str());
  r.b = kw_b(m, g, h, opts.tol, &r.max_imag);

  kw_check(r);
  coset_dims(r);

  VerlindeOptions vopts;
  const FusionRing ring_g = verlinde(g, vopts);
  const FusionRing ring_h = verlinde(h, vopts);
  r.mu_G = global_index(ring_g, g);
  r.mu_H = global_index(ring_h, h);
  r.dgh_sq = dgh_sq(r, ring_h.d);
  r.mu_coset = mu_coset(spec, r.dgh_sq, r.mu_G, r.mu_H);
  r.identified_index = 0;
  for (const auto& o : orbits) {
    const Real& d = r.dims.at(o.front());
    r.identified_index += d * d;
  }

  const double tol = opts.tol;
  auto add = [&](std::string name, const Real& value, bool pass) {
    r.checks.push_back({std::move(name), to_double(value), pass});
  };
  add("b_vac>0", r.b_vac, r.b_vac > tol);
  Real min_dim = r.dims.empty() ? Real(1) : r.dims.begin()->second;
  for (const auto& [p, d] : r.dims) min_dim = std::min(min_dim, d);
  add("min-coset-dim>=1", min_dim, min_dim >= 1 - tol);
  Real spread = 0;
  for (const auto& o : orbits)
    for (const auto& p : o) spread = std::max(spread, Real(mp::abs(r.b.at(p) - r.b.at(o.front()))));
  add("identified-b-spread", spread, spread < tol);
  Real off = 0;
  for (const auto& [p, v] : r.b)
    if (!r.exp.contains(p)) off = std::max(off, Real(mp::abs(v)));
  add("off-exp-max-abs-b", off, off < tol);
  const Real gap = mp::abs(r.mu_coset - r.identified_index);
  add("mu_coset-identified-index", gap, gap < tol);
  add("dgh_sq>=1", r.dgh_sq, r.dgh_sq >= 1 - tol);
  return r;
}

}  // namespace wzw

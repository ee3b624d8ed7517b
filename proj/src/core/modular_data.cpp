#include "wzw/modular_data.hpp"

#include "wzw/errors.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace wzw {

namespace mp = boost::multiprecision;

namespace {

// Orthonormal-basis coordinates of lambda + rho, with the last entry 0.
std::vector<std::int64_t> shifted_coords(const std::vector<int>& lambda) {
  const std::size_t n = lambda.size() + 1;
  std::vector<std::int64_t> x(n, 0);
  for (std::size_t j = n - 1; j-- > 0;) x[j] = x[j + 1] + lambda[j] + 1;
  return x;
}

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

ModularData factor_data(const Factor& f, int digits, double tol, SumMethod method) {
  PrecisionGuard guard(digits);
  const GroupSpec spec({f});
  ModularData md;
  md.spec = spec;
  md.digits = digits;
  md.tol = tol;
  md.labels = enumerate_weights(spec);
  md.reindex();
  const std::size_t n = md.size();
  const std::int64_t rank = f.rank_n;
  const std::int64_t shifted_level = f.level + f.rank_n;
  const std::int64_t order = rank * shifted_level;

  std::vector<Cplx> roots(static_cast<std::size_t>(order));
  for (std::int64_t m = 0; m < order; ++m) roots[static_cast<std::size_t>(m)] = root_of_unity(m, order);
  auto root = [&](std::int64_t m) -> const Cplx& {
    m %= order;
    if (m < 0) m += order;
    return roots[static_cast<std::size_t>(m)];
  };

  std::vector<std::vector<std::int64_t>> coords;
  coords.reserve(n);
  for (const auto& l : md.labels) coords.push_back(shifted_coords(l.parts[0]));

  const bool use_perm =
      method == SumMethod::Permutation || (method == SumMethod::Auto && f.rank_n <= 3);
  std::vector<int> perm(static_cast<std::size_t>(rank));

  // Unnormalized entries: sum_w eps(w) exp(-2 pi i (w(x), y) / (k+N)) with
  // (x, y) = sum x_a y_a - |x||y|/N, all over the common order N(k+N).
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = coords[i];
    const std::int64_t sx = std::accumulate(x.begin(), x.end(), std::int64_t{0});
    for (std::size_t j = i; j < n; ++j) {
      const auto& y = coords[j];
      const std::int64_t sy = std::accumulate(y.begin(), y.end(), std::int64_t{0});
      Cplx entry;
      if (use_perm) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
          std::int64_t dot = 0;
          for (std::size_t a = 0; a < perm.size(); ++a) dot += x[static_cast<std::size_t>(perm[a])] * y[a];
          const Cplx& z = root(-(rank * dot - sx * sy));
          if (permutation_sign(perm) > 0)
            entry += z;
          else
            entry -= z;
        } while (std::next_permutation(perm.begin(), perm.end()));
      } else {
        CMatrix d(static_cast<std::size_t>(rank), static_cast<std::size_t>(rank));
        for (std::size_t a = 0; a < x.size(); ++a)
          for (std::size_t b = 0; b < y.size(); ++b) d(a, b) = root(-rank * x[a] * y[b]);
        entry = determinant(std::move(d)) * root(sx * sy);
      }
      m(i, j) = entry;
      if (j != i) m(j, i) = entry;
    }
  }

  // Normalization constant: orthonormal rows, positive vacuum entry.
  Real row_norm = 0;
  for (std::size_t j = 0; j < n; ++j) row_norm += norm2(m(0, j));
  row_norm = mp::sqrt(row_norm);
  const Real vac_abs = abs(m(0, 0));
  if (vac_abs == 0) fail(ErrorKind::Precision, "vanishing vacuum entry in Kac-Peterson sum for " + spec.str());
  const Cplx scale = conj(m(0, 0)) * Real(1 / (vac_abs * row_norm));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) *= scale;
  md.S = std::move(m);

  const Real unitarity = max_abs(md.S * md.S.adjoint() - CMatrix::identity(n));
  if (unitarity > Real(tol)) {
    std::ostringstream os;
    os << "S matrix of " << spec.str() << " is not unitary at " << digits
       << " digits: residual " << format17(unitarity);
    fail(ErrorKind::Precision, os.str());
  }

  md.c = central_charge(spec);
  for (const auto& l : md.labels) md.delta.push_back(conformal_dimension(spec, l));
  for (const auto& h : md.delta) md.T.push_back(unit_phase(h - md.c / 24));
  for (const auto& l : md.labels) md.conj.push_back(md.index_of(conjugate(l)));
  return md;
}

}  // namespace

void ModularData::reindex() {
  index_.clear();
  for (std::size_t i = 0; i < labels.size(); ++i) index_.emplace(labels[i], i);
}

std::size_t ModularData::index_of(const WeightLabel& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) fail(ErrorKind::InvalidArgument, "label " + label.str() + " is not in " + spec.str());
  return it->second;
}

bool ModularData::contains(const WeightLabel& label) const { return index_.count(label) != 0; }

ModularData tensor(const ModularData& a, const ModularData& b) {
  PrecisionGuard guard(std::max(a.digits, b.digits));
  std::vector<Factor> fs = a.spec.factors();
  fs.insert(fs.end(), b.spec.factors().begin(), b.spec.factors().end());
  ModularData md;
  md.spec = GroupSpec(std::move(fs));
  md.digits = std::max(a.digits, b.digits);
  md.tol = std::min(a.tol, b.tol);
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  md.labels.reserve(n);
  for (const auto& la : a.labels)
    for (const auto& lb : b.labels) {
      WeightLabel l = la;
      l.parts.insert(l.parts.end(), lb.parts.begin(), lb.parts.end());
      md.labels.push_back(std::move(l));
    }
  md.reindex();
  md.S = CMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) md.S(i, j) = a.S(i / nb, j / nb) * b.S(i % nb, j % nb);
  md.c = a.c + b.c;
  for (std::size_t i = 0; i < n; ++i) {
    md.delta.push_back(a.delta[i / nb] + b.delta[i % nb]);
    md.T.push_back(unit_phase(md.delta.back() - md.c / 24));
    md.conj.push_back(a.conj[i / nb] * nb + b.conj[i % nb]);
  }
  auto flat = [](const ModularData& x) {
    return x.factors.empty() ? std::vector<ModularData>{x} : x.factors;
  };
  md.factors = flat(a);
  for (auto& f : flat(b)) md.factors.push_back(std::move(f));
  return md;
}

ModularData kac_peterson(const GroupSpec& spec, int digits, double tol, SumMethod method) {
  if (digits < kMinDigits) fail(ErrorKind::InvalidArgument, "precision must be at least 30 digits");
  if (!(tol > 0)) fail(ErrorKind::InvalidArgument, "tolerance must be positive");
  ModularData md = factor_data(spec[0], digits, tol, method);
  for (std::size_t f = 1; f < spec.size(); ++f) md = tensor(md, factor_data(spec[f], digits, tol, method));
  return md;
}

double ModularReport::get(const std::string& name) const {
  for (const auto& r : residuals)
    if (r.name == name) return r.value;
  fail(ErrorKind::InvalidArgument, "no residual named " + name);
}

CMatrix conjugation_matrix(const ModularData& md) {
  PrecisionGuard guard(md.digits);
  CMatrix c(md.size(), md.size());
  for (std::size_t i = 0; i < md.size(); ++i) c(i, md.conj[i]) = Cplx(Real(1));
  return c;
}

ModularReport verify_modular(const ModularData& md) {
  PrecisionGuard guard(md.digits);
  const std::size_t n = md.size();
  const CMatrix& s = md.S;
  ModularReport rep;
  rep.tol = md.tol;
  auto add = [&](const std::string& name, const Real& v) { rep.residuals.push_back({name, to_double(v)}); };

  // S is checked symmetric below, which makes S S^dag Hermitian and S^2, S T S
  // symmetric; only their upper triangles are computed.
  add("SS^dag-1", max_abs(symmetric_product(s, s.adjoint(), true) - CMatrix::identity(n)));

  Real tt = 0;
  for (const auto& t : md.T) tt = std::max(tt, Real(mp::abs(norm2(t) - 1)));
  add("TT^dag-1", tt);

  // TSTST = T (S T S) T
  const CMatrix sts = symmetric_product(scale_columns(s, md.T), s, false);
  add("TSTST-S", max_abs(scale_columns(scale_rows(sts, md.T), md.T) - s));

  const CMatrix c = conjugation_matrix(md);
  add("S^2-C", max_abs(symmetric_product(s, s, false) - c));

  // T is diagonal, so TC - CT has entries T_i - T_{conj(i)} at (i, conj(i)).
  Real tc = 0;
  for (std::size_t i = 0; i < n; ++i) tc = std::max(tc, abs(md.T[i] - md.T[md.conj[i]]));
  add("TC-CT", tc);

  add("S-S^T", max_abs(s - s.transpose()));

  // Distance of the vacuum row from the positive real axis.
  Real vac = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const Cplx& z = s(0, j);
    Real off = mp::abs(z.im);
    if (z.re <= 0) off = std::max(off, Real(1));
    vac = std::max(vac, off);
  }
  add("vacuum-row-positivity", vac);

  rep.pass = std::all_of(rep.residuals.begin(), rep.residuals.end(),
                         [&](const Residual& r) { return r.value < rep.tol; });
  return rep;
}

Cplx univalence(const ModularData& md, const WeightLabel& label) {
  PrecisionGuard guard(md.digits);
  return unit_phase(md.delta[md.index_of(label)]);
}

void write_matrix_csv(std::ostream& os, const std::vector<WeightLabel>& labels, const CMatrix& m) {
  os << "label";
  for (std::size_t j = 0; j < m.cols(); ++j)
    os << ',' << csv_quote(labels[j].str() + " re") << ',' << csv_quote(labels[j].str() + " im");
  os << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << csv_quote(labels[i].str());
    for (std::size_t j = 0; j < m.cols(); ++j) os << ',' << format17(m(i, j).re) << ',' << format17(m(i, j).im);
    os << '\n';
  }
}

}  // namespace wzw

#include "wzw/fusion.hpp"

#include "wzw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace wzw {

namespace mp = boost::multiprecision;

namespace {

std::string quote(const std::string& s) { return '"' + s + '"'; }

std::string paren(const WeightLabel& l) { return '(' + l.str() + ')'; }

// Verlinde sum on one set of modular data. Throws Integrality on the first
// pass if any coefficient is off an integer (or negative).
FusionRing verlinde_sum(const ModularData& md, double int_tol) {
  PrecisionGuard guard(md.digits);
  const std::size_t n = md.size();
  const CMatrix& s = md.S;
  FusionRing ring;
  ring.labels = md.labels;
  ring.coeffs.assign(n * n * n, 0);
  ring.digits_used = md.digits;

  std::vector<Cplx> inv_vac(n);
  for (std::size_t d = 0; d < n; ++d) inv_vac[d] = Cplx(Real(1)) / s(0, d);
  const CMatrix sbar = s.adjoint().transpose();

  double worst = 0.0;
  std::size_t wl = 0, wm = 0, wv = 0;
  bool negative = false;
  std::vector<Cplx> v(n);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t m = l; m < n; ++m) {
      for (std::size_t d = 0; d < n; ++d) v[d] = s(l, d) * s(m, d) * inv_vac[d];
      for (std::size_t nu = 0; nu < n; ++nu) {
        Cplx acc;
        for (std::size_t d = 0; d < n; ++d) fma_into(acc, v[d], sbar(nu, d));
        const double re = to_double(acc.re);
        const long rounded = std::lround(re);
        const double resid = std::max(to_double(mp::abs(acc.re - Real(rounded))), to_double(mp::abs(acc.im)));
        if (resid > worst) {
          worst = resid;
          wl = l, wm = m, wv = nu;
        }
        if (rounded < 0) {
          negative = true;
          wl = l, wm = m, wv = nu;
        }
        ring.coeffs[(l * n + m) * n + nu] = static_cast<int>(rounded);
        ring.coeffs[(m * n + l) * n + nu] = static_cast<int>(rounded);
      }
    }
  }
  ring.max_residual = worst;
  if (worst > int_tol || negative) {
    std::ostringstream os;
    os << "Verlinde coefficient N_{" << md.labels[wl].str() << ", " << md.labels[wm].str() << "}^{"
       << md.labels[wv].str() << "} of " << md.spec.str() << " is "
       << (negative ? "negative" : "not an integer") << " at " << md.digits << " digits (residual "
       << format17(worst) << ")";
    fail(ErrorKind::Integrality, os.str());
  }

  ring.d.reserve(n);
  ring.mu = 0;
  for (std::size_t j = 0; j < n; ++j) {
    ring.d.push_back(s(0, j).re / s(0, 0).re);
    ring.mu += ring.d.back() * ring.d.back();
  }
  return ring;
}

FusionRing verlinde_any(const ModularData& md, double int_tol) {
  if (md.factors.empty()) return verlinde_sum(md, int_tol);
  FusionRing ring = verlinde_sum(md.factors[0], int_tol);
  for (std::size_t f = 1; f < md.factors.size(); ++f) ring = tensor(ring, verlinde_sum(md.factors[f], int_tol));
  return ring;
}

}  // namespace

FusionRing verlinde(const ModularData& md, const VerlindeOptions& opts) {
  const GroupSpec spec = md.spec;
  const double tol = md.tol;
  return verlinde(md, [spec, tol](int digits) { return kac_peterson(spec, digits, tol); }, opts);
}

FusionRing verlinde(const ModularData& md, const ModularProvider& rebuild, const VerlindeOptions& opts) {
  std::string history;
  try {
    return verlinde_any(md, opts.integrality_tol);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Integrality) throw;
    history = e.what();
  }
  for (int digits = md.digits * 2; digits <= opts.max_digits; digits *= 2) {
    try {
      return verlinde_any(rebuild(digits), opts.integrality_tol);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Integrality) throw;
      history += "; ";
      history += e.what();
    }
  }
  fail(ErrorKind::Integrality, "Verlinde integrality failed after precision escalation: " + history);
}

FusionRing verlinde_direct(const ModularData& md, const VerlindeOptions& opts) {
  return verlinde_sum(md, opts.integrality_tol);
}

FusionRing tensor(const FusionRing& a, const FusionRing& b) {
  PrecisionGuard guard(std::max(a.digits_used, b.digits_used));
  FusionRing r;
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  for (const auto& la : a.labels)
    for (const auto& lb : b.labels) {
      WeightLabel l = la;
      l.parts.insert(l.parts.end(), lb.parts.begin(), lb.parts.end());
      r.labels.push_back(std::move(l));
    }
  r.coeffs.assign(n * n * n, 0);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) {
      const std::size_t l1 = l / nb, l2 = l % nb, m1 = m / nb, m2 = m % nb;
      for (std::size_t v1 = 0; v1 < na; ++v1) {
        const int x = a(l1, m1, v1);
        if (!x) continue;
        for (std::size_t v2 = 0; v2 < nb; ++v2) r.coeffs[(l * n + m) * n + v1 * nb + v2] = x * b(l2, m2, v2);
      }
    }
  r.mu = a.mu * b.mu;
  for (std::size_t i = 0; i < n; ++i) r.d.push_back(a.d[i / nb] * b.d[i % nb]);
  r.max_residual = std::max(a.max_residual, b.max_residual);
  r.digits_used = std::max(a.digits_used, b.digits_used);
  return r;
}

const std::vector<Real>& quantum_dims(const FusionRing& ring) { return ring.d; }

Real global_index(const FusionRing& ring, const ModularData& md) {
  PrecisionGuard guard(md.digits);
  const Real expected = 1 / (md.S(0, 0).re * md.S(0, 0).re);
  const Real diff = mp::abs(ring.mu - expected);
  if (diff > Real(md.tol))
    fail(ErrorKind::Precision, "global index sum d^2 = " + format17(ring.mu) + " disagrees with 1/S_00^2 = " +
                                   format17(expected));
  return ring.mu;
}

bool check_vacuum_identity(const FusionRing& ring) {
  const std::size_t n = ring.size();
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t v = 0; v < n; ++v)
      if (ring(0, m, v) != (m == v ? 1 : 0)) return false;
  return true;
}

bool check_symmetries(const FusionRing& ring, const std::vector<std::size_t>& conj) {
  const std::size_t n = ring.size();
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = 0; v < n; ++v) {
        const int x = ring(l, m, v);
        if (x < 0) return false;
        if (x != ring(m, l, v)) return false;
        if (x != ring(l, conj[v], conj[m])) return false;
        if (x != ring(conj[l], conj[m], conj[v])) return false;
      }
  return true;
}

bool check_associativity(const FusionRing& ring) {
  // sum_s N_{lm}^s N_{sv}^t == sum_s N_{mv}^s N_{ls}^t for all l, m, v, t.
  const std::size_t n = ring.size();
  std::vector<std::vector<std::size_t>> support(n * n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t s = 0; s < n; ++s)
        if (ring(l, m, s)) support[l * n + m].push_back(s);
  std::vector<long> lhs(n), rhs(n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = 0; v < n; ++v) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (std::size_t s : support[l * n + m]) {
          const long a = ring(l, m, s);
          for (std::size_t t : support[s * n + v]) lhs[t] += a * ring(s, v, t);
        }
        for (std::size_t s : support[m * n + v]) {
          const long a = ring(m, v, s);
          for (std::size_t t : support[l * n + s]) rhs[t] += a * ring(l, s, t);
        }
        if (lhs != rhs) return false;
      }
  return true;
}

double dimension_character_residual(const FusionRing& ring) {
  PrecisionGuard guard(ring.digits_used);
  const std::size_t n = ring.size();
  Real worst = 0;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) {
      Real acc = -ring.d[l] * ring.d[m];
      for (std::size_t v = 0; v < n; ++v)
        if (const int x = ring(l, m, v)) acc += ring.d[v] * x;
      worst = std::max(worst, Real(mp::abs(acc)));
    }
  return to_double(worst);
}

YMatrixReport y_matrix(const ModularData& md, const FusionRing& ring) {
  PrecisionGuard guard(md.digits);
  const std::size_t n = md.size();
  std::vector<Cplx> omega;
  omega.reserve(n);
  for (const auto& h : md.delta) omega.push_back(unit_phase(h));

  YMatrixReport rep;
  rep.Y = CMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Cplx acc;
      for (std::size_t k = 0; k < n; ++k)
        if (const int x = ring(i, j, k)) acc += conj(omega[k]) * Real(ring.d[k] * x);
      rep.Y(i, j) = acc * omega[i] * omega[j];
    }

  Real col = 0, vac = 0, sym = 0;
  const Cplx s00 = md.S(0, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Cplx& y = rep.Y(i, j);
      col = std::max(col, abs(y - md.S(i, j) / md.S(0, j)));
      vac = std::max(vac, abs(y - md.S(i, j) / s00));
      sym = std::max(sym, abs(y - rep.Y(j, i)));
      sym = std::max(sym, abs(y - conj(rep.Y(i, md.conj[j]))));
      sym = std::max(sym, abs(y - rep.Y(md.conj[i], md.conj[j])));
    }
  rep.column_ratio_residual = to_double(col);
  rep.vacuum_ratio_residual = to_double(vac);
  rep.symmetry_residual = to_double(sym);
  return rep;
}

SigmaTilde sigma_tilde(const ModularData& md, const FusionRing& ring) {
  PrecisionGuard guard(md.digits);
  SigmaTilde st;
  st.sum_d2 = 0;
  for (std::size_t i = 0; i < md.size(); ++i) {
    const Real d2 = ring.d[i] * ring.d[i];
    st.value += conj(unit_phase(md.delta[i])) * d2;
    st.sum_d2 += d2;
  }
  st.abs2 = norm2(st.value);
  st.residual = to_double(mp::abs(st.abs2 - st.sum_d2));
  return st;
}

void write_fusion_csv(std::ostream& os, const FusionRing& ring) {
  const std::size_t n = ring.size();
  os << "lambda,mu,nu,N\n";
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = 0; v < n; ++v)
        if (const int x = ring(l, m, v))
          os << quote(ring.labels[l].str()) << ',' << quote(ring.labels[m].str()) << ','
             << quote(ring.labels[v].str()) << ',' << x << '\n';
}

void write_fusion_table(std::ostream& os, const FusionRing& ring) {
  const std::size_t n = ring.size();
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = l; m < n; ++m) {
      os << paren(ring.labels[l]) << " x " << paren(ring.labels[m]) << " =";
      bool first = true;
      for (std::size_t v = 0; v < n; ++v) {
        const int x = ring(l, m, v);
        if (!x) continue;
        os << (first ? " " : " + ");
        if (x > 1) os << x << '*';
        os << paren(ring.labels[v]);
        first = false;
      }
      os << '\n';
    }
}

}  // namespace wzw

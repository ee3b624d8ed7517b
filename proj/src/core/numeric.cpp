#include "wzw/numeric.hpp"

#include <climits>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

namespace wzw {

namespace mp = boost::multiprecision;

PrecisionGuard::PrecisionGuard(int digits) : saved_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(digits));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

Cplx operator/(const Cplx& a, const Cplx& b) {
  Real den = norm2(b);
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

Real abs(const Cplx& a) { return mp::sqrt(norm2(a)); }

void fma_into(Cplx& acc, const Cplx& a, const Cplx& b) {
  // Direct MPFR calls into reusable scratch values; the expression templates
  // would allocate temporaries for every complex product.
  thread_local Real scratch;
  mpfr_ptr t = scratch.backend().data();
  const mpfr_prec_t prec = mpfr_get_prec(acc.re.backend().data());
  if (mpfr_get_prec(t) != prec) mpfr_set_prec(t, prec);
  mpfr_ptr re = acc.re.backend().data();
  mpfr_ptr im = acc.im.backend().data();
  mpfr_srcptr ar = a.re.backend().data();
  mpfr_srcptr ai = a.im.backend().data();
  mpfr_srcptr br = b.re.backend().data();
  mpfr_srcptr bi = b.im.backend().data();
  mpfr_mul(t, ar, br, MPFR_RNDN);
  mpfr_add(re, re, t, MPFR_RNDN);
  mpfr_mul(t, ai, bi, MPFR_RNDN);
  mpfr_sub(re, re, t, MPFR_RNDN);
  mpfr_mul(t, ar, bi, MPFR_RNDN);
  mpfr_add(im, im, t, MPFR_RNDN);
  mpfr_mul(t, ai, br, MPFR_RNDN);
  mpfr_add(im, im, t, MPFR_RNDN);
}

Real pi() {
  Real p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

Cplx unit_phase(const Rational& q) {
  Real angle = 2 * pi() * Real(q.numerator()) / Real(q.denominator());
  return {mp::cos(angle), mp::sin(angle)};
}

Cplx root_of_unity(std::int64_t m, std::int64_t order) {
  m %= order;
  if (m < 0) m += order;
  return unit_phase(Rational(m, order));
}

double to_double(const Real& x) { return x.convert_to<double>(); }

std::string format17(const Real& x) { return format17(to_double(x)); }

std::string format17(double x) {
  if (x == 0.0) x = 0.0;  // drop negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_rational(const Rational& q) {
  std::ostringstream os;
  os << q.numerator();
  if (q.denominator() != 1) os << '/' << q.denominator();
  return os.str();
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Cplx(Real(1));
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = conj((*this)(i, j));
  return r;
}

CMatrix CMatrix::transpose() const {
  CMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  CMatrix bt = b.transpose();
  CMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Cplx acc;
      for (std::size_t k = 0; k < a.cols(); ++k) fma_into(acc, a(i, k), bt(j, k));
      r(i, j) = std::move(acc);
    }
  }
  return r;
}

namespace {

// Entries as integers scaled by 2^shift, so that sums of products accumulate
// exactly and are rounded once.
struct FixedPoint {
  std::vector<mpz_class> re, im;
  long shift = 0;
};

long max_exponent(const CMatrix& m) {
  long e = LONG_MIN;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const Real* x : {&m(i, j).re, &m(i, j).im})
        if (!mpfr_zero_p(x->backend().data())) e = std::max(e, static_cast<long>(mpfr_get_exp(x->backend().data())));
  return e == LONG_MIN ? 0 : e;
}

FixedPoint to_fixed(const CMatrix& m, bool transposed, long bits) {
  FixedPoint f;
  f.shift = bits - max_exponent(m);
  f.re.resize(m.rows() * m.cols());
  f.im.resize(m.rows() * m.cols());
  Real t;
  mpfr_ptr tp = t.backend().data();
  mpfr_set_prec(tp, mpfr_get_prec(m(0, 0).re.backend().data()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::size_t at = transposed ? j * m.rows() + i : i * m.cols() + j;
      mpfr_mul_2si(tp, m(i, j).re.backend().data(), f.shift, MPFR_RNDN);
      mpfr_get_z(f.re[at].get_mpz_t(), tp, MPFR_RNDN);
      mpfr_mul_2si(tp, m(i, j).im.backend().data(), f.shift, MPFR_RNDN);
      mpfr_get_z(f.im[at].get_mpz_t(), tp, MPFR_RNDN);
    }
  return f;
}

}  // namespace

CMatrix symmetric_product(const CMatrix& a, const CMatrix& b, bool hermitian) {
  const std::size_t n = a.cols();
  CMatrix r(a.rows(), b.cols());
  if (n == 0 || a.rows() == 0 || b.cols() == 0) return r;
  const long bits = static_cast<long>(mpfr_get_prec(a(0, 0).re.backend().data())) + 16;
  const FixedPoint fa = to_fixed(a, false, bits);
  const FixedPoint fb = to_fixed(b, true, bits);
  mpz_class re, im;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < b.cols(); ++j) {
      re = 0;
      im = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t x = i * n + k, y = j * n + k;
        mpz_addmul(re.get_mpz_t(), fa.re[x].get_mpz_t(), fb.re[y].get_mpz_t());
        mpz_submul(re.get_mpz_t(), fa.im[x].get_mpz_t(), fb.im[y].get_mpz_t());
        mpz_addmul(im.get_mpz_t(), fa.re[x].get_mpz_t(), fb.im[y].get_mpz_t());
        mpz_addmul(im.get_mpz_t(), fa.im[x].get_mpz_t(), fb.re[y].get_mpz_t());
      }
      Cplx acc;
      mpfr_set_z_2exp(acc.re.backend().data(), re.get_mpz_t(), -(fa.shift + fb.shift), MPFR_RNDN);
      mpfr_set_z_2exp(acc.im.backend().data(), im.get_mpz_t(), -(fa.shift + fb.shift), MPFR_RNDN);
      r(j, i) = hermitian ? conj(acc) : acc;
      r(i, j) = std::move(acc);
    }
  }
  return r;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

CMatrix scale_columns(const CMatrix& m, const std::vector<Cplx>& diag) {
  CMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j) * diag[j];
  return r;
}

CMatrix scale_rows(const CMatrix& m, const std::vector<Cplx>& diag) {
  CMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = diag[i] * m(i, j);
  return r;
}

Real max_abs(const CMatrix& m) {
  Real best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Real v = norm2(m(i, j));
      if (v > best) best = v;
    }
  return mp::sqrt(best);
}

Cplx determinant(CMatrix m) {
  const std::size_t n = m.rows();
  Cplx det(Real(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    Real best = norm2(m(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      Real v = norm2(m(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0) return Cplx();
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      Cplx f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

}  // namespace wzw

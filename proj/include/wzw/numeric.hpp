#pragma once

// High-precision real/complex scalars, dense complex matrices and exact
// rationals shared by every module.

#include <boost/multiprecision/mpfr.hpp>
#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wzw {

using Real = boost::multiprecision::mpfr_float;
using Rational = boost::rational<std::int64_t>;

constexpr int kDefaultDigits = 50;
constexpr int kMinDigits = 30;

// Sets the default MPFR precision (decimal digits) for the lifetime of the
// guard. Values created inside the scope carry that precision.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(int digits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

struct Cplx {
  Real re;
  Real im;

  Cplx() : re(0), im(0) {}
  Cplx(Real r) : re(std::move(r)), im(0) {}  // NOLINT: implicit by intent
  Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Cplx& operator+=(const Cplx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Cplx& operator-=(const Cplx& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Cplx& operator*=(const Cplx& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Cplx& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
};

inline Cplx operator+(Cplx a, const Cplx& b) { return a += b; }
inline Cplx operator-(Cplx a, const Cplx& b) { return a -= b; }
inline Cplx operator*(Cplx a, const Cplx& b) { return a *= b; }
inline Cplx operator*(Cplx a, const Real& s) { return a *= s; }
inline Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
Cplx operator/(const Cplx& a, const Cplx& b);

inline Cplx conj(const Cplx& a) { return {a.re, -a.im}; }
inline Real norm2(const Cplx& a) { return a.re * a.re + a.im * a.im; }
Real abs(const Cplx& a);

// Accumulates acc += a*b without temporaries for the real/imag parts.
void fma_into(Cplx& acc, const Cplx& a, const Cplx& b);

Real pi();
// exp(2*pi*i*q) for an exact rational q.
Cplx unit_phase(const Rational& q);
// exp(2*pi*i*m/order) for integer m.
Cplx root_of_unity(std::int64_t m, std::int64_t order);

double to_double(const Real& x);
// 17 significant digits, as used in every exported artefact.
std::string format17(const Real& x);
std::string format17(double x);
std::string format_rational(const Rational& q);

// Row-major dense complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  CMatrix adjoint() const;
  CMatrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cplx> data_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
// a * b for a product known to be symmetric (or Hermitian): only the upper
// triangle is computed and mirrored.
CMatrix symmetric_product(const CMatrix& a, const CMatrix& b, bool hermitian);
// Multiplies column j of m by diag[j] (m * diag(d)).
CMatrix scale_columns(const CMatrix& m, const std::vector<Cplx>& diag);
// diag(d) * m.
CMatrix scale_rows(const CMatrix& m, const std::vector<Cplx>& diag);
// Largest |entry|.
Real max_abs(const CMatrix& m);

// Determinant by Gaussian elimination with partial pivoting.
Cplx determinant(CMatrix m);

}  // namespace wzw

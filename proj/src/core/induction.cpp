#include "wzw/induction.hpp"

#include "wzw/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <ostream>

namespace wzw {

InvariantMatrix z_matrix(const BranchingTable& b) {
  InvariantMatrix z;
  z.labels = b.cols;
  const std::size_t n = b.cols.size();
  z.z.assign(n * n, 0);
  for (std::size_t i = 0; i < b.rows.size(); ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (!b.at(i, l)) continue;
      for (std::size_t m = 0; m < n; ++m) z(l, m) += static_cast<std::int64_t>(b.at(i, l)) * b.at(i, m);
    }
  return z;
}

InvariantMatrix identity_invariant(const std::vector<WeightLabel>& labels) {
  InvariantMatrix z;
  z.labels = labels;
  z.z.assign(labels.size() * labels.size(), 0);
  for (std::size_t i = 0; i < labels.size(); ++i) z(i, i) = 1;
  return z;
}

InvariantReport verify_invariant(const InvariantMatrix& z, const ModularData& sub) {
  if (z.labels != sub.labels) fail(ErrorKind::InvalidArgument, "Z is not indexed by the labels of " + sub.spec.str());
  PrecisionGuard guard(sub.digits);
  const std::size_t n = z.size();
  CMatrix zm(n, n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      if (z(l, m)) zm(l, m) = Cplx(Real(z(l, m)));

  InvariantReport r;
  r.tol = sub.tol;
  r.s_residual = to_double(max_abs(zm * sub.S - sub.S * zm));
  Real t = 0;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      if (z(l, m)) t = std::max(t, Real(abs(sub.T[m] - sub.T[l]) * z(l, m)));
  r.t_residual = to_double(t);
  r.vacuum_one = n > 0 && z(0, 0) == 1;
  r.symmetric = true;
  r.nonnegative = true;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) {
      if (z(l, m) != z(m, l)) r.symmetric = false;
      if (z(l, m) < 0) r.nonnegative = false;
    }
  r.min_eigenvalue = r.symmetric ? min_eigenvalue(z) : 0.0;
  return r;
}

std::int64_t sector_count_sum(const InvariantMatrix& z) {
  std::int64_t s = 0;
  for (auto v : z.z) s += v;
  return s;
}

double min_eigenvalue(const InvariantMatrix& z) {
  const auto n = static_cast<Eigen::Index>(z.size());
  if (n == 0) return 0.0;
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = static_cast<double>(z(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void write_z_csv(std::ostream& os, const InvariantMatrix& z) {
  os << "label";
  for (const auto& l : z.labels) os << ",\"" << l.str() << '"';
  os << '\n';
  for (std::size_t i = 0; i < z.size(); ++i) {
    os << '"' << z.labels[i].str() << '"';
    for (std::size_t j = 0; j < z.size(); ++j) os << ',' << z(i, j);
    os << '\n';
  }
}

}  // namespace wzw

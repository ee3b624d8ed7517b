#pragma once

// Sector-counting matrix Z = b^T b of a conformal inclusion and its
// modular-invariance checks.

#include "wzw/branching.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace wzw {

struct InvariantMatrix {
  std::vector<WeightLabel> labels;  // sub-theory labels
  std::vector<std::int64_t> z;      // labels x labels, row-major

  std::size_t size() const { return labels.size(); }
  std::int64_t operator()(std::size_t l, std::size_t m) const { return z[l * labels.size() + m]; }
  std::int64_t& operator()(std::size_t l, std::size_t m) { return z[l * labels.size() + m]; }
  bool operator==(const InvariantMatrix&) const = default;
};

// Z_{lm} = sum_i b_{il} b_{im}
InvariantMatrix z_matrix(const BranchingTable& b);

InvariantMatrix identity_invariant(const std::vector<WeightLabel>& labels);

struct InvariantReport {
  double s_residual = 0.0;  // max |Z S - S Z|
  double t_residual = 0.0;  // max |Z T - T Z|
  bool vacuum_one = false;
  bool symmetric = false;
  bool nonnegative = false;
  double min_eigenvalue = 0.0;
  double tol = kDefaultTol;

  bool pass() const { return s_residual < tol && t_residual < tol; }
};

InvariantReport verify_invariant(const InvariantMatrix& z, const ModularData& sub);

std::int64_t sector_count_sum(const InvariantMatrix& z);

// Smallest eigenvalue of the symmetric integer matrix (double precision).
double min_eigenvalue(const InvariantMatrix& z);

// Header row of quoted labels, then one labelled row per label.
void write_z_csv(std::ostream& os, const InvariantMatrix& z);

}  // namespace wzw

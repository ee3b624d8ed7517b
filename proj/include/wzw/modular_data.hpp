#pragma once

// Genus-1 modular data of SU(N)_k products: Kac-Peterson S, conformal
// dimensions, central charge, T phases and the conjugation permutation.

#include "wzw/lattice.hpp"
#include "wzw/numeric.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace wzw {

constexpr double kDefaultTol = 1e-9;

struct ModularData {
  GroupSpec spec;
  std::vector<WeightLabel> labels;
  CMatrix S;
  std::vector<Rational> delta;
  Rational c;
  // T_l = exp(2 pi i (delta_l - c/24))
  std::vector<Cplx> T;
  std::vector<std::size_t> conj;
  int digits = kDefaultDigits;
  double tol = kDefaultTol;
  // Single-factor data for each factor when spec has more than one factor;
  // S is then the entrywise tensor product of these.
  std::vector<ModularData> factors;

  std::size_t size() const { return labels.size(); }
  std::size_t vacuum_index() const { return 0; }
  // Throws InvalidArgument for labels outside this theory.
  std::size_t index_of(const WeightLabel& label) const;
  bool contains(const WeightLabel& label) const;

  // Rebuilt from `labels`; called by the constructors below.
  void reindex();

 private:
  std::map<WeightLabel, std::size_t> index_;
};

enum class SumMethod {
  Auto,         // permutation sum for N <= 3, determinant otherwise
  Permutation,  // literal alternating sum over S_N
  Determinant,  // N x N determinant of exponentials
};

ModularData kac_peterson(const GroupSpec& spec, int digits = kDefaultDigits, double tol = kDefaultTol,
                         SumMethod method = SumMethod::Auto);

// Entrywise tensor product of two theories (labels concatenated factor-wise).
ModularData tensor(const ModularData& a, const ModularData& b);

struct Residual {
  std::string name;
  double value = 0.0;
};

struct ModularReport {
  std::vector<Residual> residuals;
  double tol = kDefaultTol;
  bool pass = false;

  double get(const std::string& name) const;
};

// Residual max-norms of S S^dag - 1, T T^dag - 1, TSTST - S, S^2 - C,
// T C - C T, S - S^T and the sign of the vacuum row.
ModularReport verify_modular(const ModularData& md);

// omega_l = exp(2 pi i delta_l)
Cplx univalence(const ModularData& md, const WeightLabel& label);

// Conjugation permutation as a matrix.
CMatrix conjugation_matrix(const ModularData& md);

// One row per label: the label followed by re,im pairs for each column.
void write_matrix_csv(std::ostream& os, const std::vector<WeightLabel>& labels, const CMatrix& m);

}  // namespace wzw

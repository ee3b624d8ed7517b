#pragma once

// Verlinde fusion rules, quantum dimensions, global index, the Y-matrix
// built from fusion data and univalences, and sigma-tilde.

#include "wzw/modular_data.hpp"

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

namespace wzw {

struct FusionRing {
  std::vector<WeightLabel> labels;
  // N_{l m}^v at (l * n + m) * n + v
  std::vector<int> coeffs;
  std::vector<Real> d;
  Real mu;  // sum of d^2
  double max_residual = 0.0;
  int digits_used = kDefaultDigits;

  std::size_t size() const { return labels.size(); }
  int operator()(std::size_t l, std::size_t m, std::size_t v) const {
    const std::size_t n = labels.size();
    return coeffs[(l * n + m) * n + v];
  }
};

struct VerlindeOptions {
  double integrality_tol = 1e-6;
  // Escalation doubles the precision while it stays at or below this.
  int max_digits = 200;
};

// Rebuilds modular data at a given precision; used to escalate.
using ModularProvider = std::function<ModularData(int digits)>;

// Evaluates the Verlinde sum, rounds to integers and checks integrality.
// Multi-factor data is handled factor by factor. On a rounding residual
// above tolerance the data is rebuilt at doubled precision; if that keeps
// failing an Integrality error naming the worst triple is thrown.
FusionRing verlinde(const ModularData& md, const VerlindeOptions& opts = {});
FusionRing verlinde(const ModularData& md, const ModularProvider& rebuild, const VerlindeOptions& opts = {});

// Full Verlinde sum over all labels of md, no factorization, no escalation.
FusionRing verlinde_direct(const ModularData& md, const VerlindeOptions& opts = {});

FusionRing tensor(const FusionRing& a, const FusionRing& b);

const std::vector<Real>& quantum_dims(const FusionRing& ring);
// sum d^2; throws Precision if it disagrees with 1/S_00^2 beyond md.tol.
Real global_index(const FusionRing& ring, const ModularData& md);

// Exact checks on the integer tensor.
bool check_vacuum_identity(const FusionRing& ring);
bool check_symmetries(const FusionRing& ring, const std::vector<std::size_t>& conj);
bool check_associativity(const FusionRing& ring);
// max |sum_v N_{lm}^v d_v - d_l d_m|
double dimension_character_residual(const FusionRing& ring);

struct YMatrixReport {
  CMatrix Y;
  // max |Y_{lm} - S_{lm}/S_{vac,m}|
  double column_ratio_residual = 0.0;
  // max |Y_{lm} - S_{lm}/S_{vac,vac}|
  double vacuum_ratio_residual = 0.0;
  // max over Y_ij - Y_ji, Y_ij - conj(Y_{i conj(j)}), Y_ij - Y_{conj(i) conj(j)}
  double symmetry_residual = 0.0;
  double det_abs = 0.0;
};

// Y_{ij} = sum_k N_{ij}^k omega_i omega_j / omega_k d_k
YMatrixReport y_matrix(const ModularData& md, const FusionRing& ring);

struct SigmaTilde {
  Cplx value;
  Real abs2;
  Real sum_d2;
  double residual = 0.0;  // | |sigma|^2 - sum d^2 |
};

// sum_i d_i^2 / omega_i
SigmaTilde sigma_tilde(const ModularData& md, const FusionRing& ring);

// "lambda","mu","nu",N for every nonzero coefficient.
void write_fusion_csv(std::ostream& os, const FusionRing& ring);
// "(1) x (1) = (0) + (2)" lines for l <= m.
void write_fusion_table(std::ostream& os, const FusionRing& ring);

}  // namespace wzw

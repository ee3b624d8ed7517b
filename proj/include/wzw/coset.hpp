#pragma once

// Diagonal coset data: the Kac-Wakimoto quantity b(i,alpha), coset
// dimensions, index invariants, central charge and the positivity verdict.

#include "wzw/branching.hpp"
#include "wzw/fusion.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wzw {

struct ExpSet {
  std::vector<LabelPair> pairs;  // sorted
  // True while the set comes from the N-ality rule without an oracle check.
  bool proxy = true;

  bool contains(const LabelPair& p) const;
};

// Selection-rule proxy over all label pairs of a diagonal spec.
ExpSet exp_set(const EmbeddingSpec& spec);
// Ground truth from the character oracle.
ExpSet exp_set(const OracleResult& oracle);

// b(i,alpha) = sum_{(j,beta)} S_ij conj(S'_{alpha beta}) m_{j beta} for every
// label pair. Throws Precision if an imaginary part reaches tol.
std::map<LabelPair, Real> kw_b(const BranchingTable& m, const ModularData& ambient, const ModularData& sub,
                               double tol, double* max_imag = nullptr);

struct ConsistencyCheck {
  std::string name;
  double value = 0.0;
  bool pass = false;
};

struct CosetReport {
  EmbeddingSpec spec;
  ExpSet exp;
  std::map<LabelPair, Real> b;
  Real b_vac;
  std::map<LabelPair, Real> dims;  // on exp
  Real dgh_sq;
  Real mu_G, mu_H, mu_coset;
  // Sum of dims^2 with each identification orbit in exp counted once.
  Real identified_index;
  std::size_t identified_sectors = 0;
  Rational c_coset;
  double max_imag = 0.0;
  double tol = kDefaultTol;
  bool kw_pass = false;
  std::vector<std::string> witnesses;
  std::vector<std::string> warnings;
  std::vector<ConsistencyCheck> checks;

  // kw_pass and every consistency check
  bool pass() const;
};

// Pass iff b > tol on every pair of exp; failures are listed as witnesses.
void kw_check(CosetReport& report);

// dims = b / b(vac,vac) on exp. Throws Precision if b(vac,vac) <= tol.
void coset_dims(CosetReport& report);

// sum over alpha with (vac,alpha) in exp of d_(vac,alpha) d_alpha.
Real dgh_sq(const CosetReport& report, const std::vector<Real>& sub_dims);
// Degenerate (conformal) version: sum_alpha b_{vac,alpha} d_alpha.
Real dgh_sq_conformal(const BranchingTable& table, const std::vector<Real>& sub_dims);

// d(G/H)^4 mu_G / mu_H. Unsupported for conformal specs.
Real mu_coset(const EmbeddingSpec& spec, const Real& dgh_sq, const Real& mu_g, const Real& mu_h);

Rational coset_central_charge(const EmbeddingSpec& spec);

struct CosetOptions {
  int digits = kDefaultDigits;
  double tol = kDefaultTol;
  // Replaces the vacuum-orbit multiplicities when set.
  std::optional<BranchingTable> multiplicities;
  // Confirms the exp set against the character oracle (SU(2) only).
  std::optional<int> oracle_truncation;
};

// Full report for a diagonal spec. Unsupported if some identification orbit
// in exp has a fixed point.
CosetReport analyze_coset(const EmbeddingSpec& spec, const CosetOptions& opts = {});

}  // namespace wzw

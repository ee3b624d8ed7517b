#pragma once

// Branching and multiplicity data: the commutant solver for conformal
// inclusions, vacuum multiplicities for diagonal cosets, a file format for
// user tables, and a q-series character oracle for the SU(2) diagonal family.

#include "wzw/embedding.hpp"
#include "wzw/modular_data.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace wzw {

struct BranchingTable {
  GroupSpec ambient;
  GroupSpec sub;
  std::vector<WeightLabel> rows;  // all ambient labels
  std::vector<WeightLabel> cols;  // all sub labels
  std::vector<int> entries;       // rows x cols, row-major

  static BranchingTable zeros(const GroupSpec& ambient, const GroupSpec& sub);

  int at(std::size_t i, std::size_t a) const { return entries[i * cols.size() + a]; }
  int& at(std::size_t i, std::size_t a) { return entries[i * cols.size() + a]; }
  int at(const LabelPair& p) const;
  int& at(const LabelPair& p);

  // Pairs with a nonzero entry, in row-major order.
  std::vector<LabelPair> exp() const;

  bool operator==(const BranchingTable&) const = default;
};

// Throws InvalidArgument on a negative entry, a vacuum entry other than 1,
// or (when the central charges agree) a nonzero entry with non-integral
// conformal-weight difference.
void check_table(const BranchingTable& table);

struct SolverOptions {
  int entry_bound = 6;
  // Pivot threshold of the elimination, relative to the largest entry.
  double pivot_tol = 1e-25;
};

struct SolverResult {
  BranchingTable table;
  std::size_t support_size = 0;    // Delta-congruent pairs
  std::size_t nullspace_dim = 0;   // dimension of the intertwiner space
  std::size_t candidates = 0;      // integer points enumerated
  std::size_t conjugate_solutions = 1;  // 2 when a charge-conjugate table was folded in
  double s_residual = 0.0;         // max |S B - B S'|
  double t_residual = 0.0;         // max |T B - B T'|
};

// Nonnegative integer B with B_{vac,vac} = 1, S B = B S', T B = B T'.
// Infeasible if none exists within the entry bound, Ambiguous if several do.
SolverResult solve_conformal_inclusion(const EmbeddingSpec& spec, const ModularData& ambient,
                                       const ModularData& sub, const SolverOptions& opts = {});

// m = 1 on the vacuum simple-current orbit of a diagonal spec, 0 elsewhere.
BranchingTable diagonal_vacuum_multiplicities(const EmbeddingSpec& spec);

// Exponent offset plus integer coefficients: sum_n coeffs[n] q^(offset + n).
struct QSeries {
  Rational offset;
  std::vector<std::int64_t> coeffs;

  bool is_zero() const;
  // Coefficients keyed by absolute exponent, exponents <= limit only.
  std::map<Rational, std::int64_t> terms_through(const Rational& limit) const;
};

// Equal as q-series on every exponent both sides resolve (<= min offset + L).
bool series_equal(const QSeries& a, const QSeries& b);

// One SU(2)_k character: per grade, SU(2) weight (Dynkin, i.e. 2j) -> multiplicity.
using GradedWeights = std::vector<std::map<int, std::int64_t>>;

constexpr int kMaxTruncation = 40;

// Characters of all level-k labels through grade L, from the theta-function
// numerator divided by the Weyl-Kac denominator.
std::vector<GradedWeights> su2_characters(int k, int truncation);

struct OracleResult {
  EmbeddingSpec spec;
  int truncation = 0;
  std::map<LabelPair, QSeries> branching;
  std::set<LabelPair> support;          // pairs with a nonzero series
  std::set<LabelPair> vacuum_equal;     // pairs whose series equals the vacuum series
  bool support_matches_selection_rule = false;
  bool vacuum_equal_matches_orbit = false;
};

// Decomposes chi_{l1} chi_{l2} = sum_b b_{(l1,l2);b}(q) chi_b grade by grade.
OracleResult su2_diagonal_branching_oracle(int k1, int k2, int truncation = 20);

// Header "ambient: ...", "sub: ...", then "i ; alpha ; multiplicity" rows.
void write_table(std::ostream& os, const BranchingTable& table);
BranchingTable read_table(std::istream& is);
BranchingTable load_table(const std::string& path);
void save_table(const std::string& path, const BranchingTable& table);

}  // namespace wzw

#pragma once

// Weight-lattice combinatorics for products of SU(N) at positive level.
//
// Weights are stored as unshifted Dynkin labels (a_1, ..., a_{N-1}); the
// shift by rho is applied only where the Kac-Peterson sum is evaluated.

#include "wzw/numeric.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace wzw {

struct Factor {
  int rank_n = 2;  // the N of SU(N)
  int level = 1;

  auto operator<=>(const Factor&) const = default;
};

// A product SU(N_1)_{k_1} x ... x SU(N_n)_{k_n}.
class GroupSpec {
 public:
  GroupSpec() = default;
  explicit GroupSpec(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  const Factor& operator[](std::size_t i) const { return factors_.at(i); }

  // "su2@4 x su3@1"
  std::string str() const;

  auto operator<=>(const GroupSpec&) const = default;

 private:
  std::vector<Factor> factors_;
};

// Parses "suN@k [x suN@k ...]". Whitespace around 'x' is optional.
GroupSpec parse_group(const std::string& text);

// One Dynkin label vector per factor.
struct WeightLabel {
  std::vector<std::vector<int>> parts;

  auto operator<=>(const WeightLabel&) const = default;

  // "1,0;2" : comma-separated labels, semicolon-separated factors.
  std::string str() const;
};

WeightLabel parse_label(const std::string& text);

// Level-restricted dominant weights, lexicographic with the vacuum first.
std::vector<WeightLabel> enumerate_weights(const GroupSpec& spec);
std::vector<std::vector<int>> enumerate_factor_weights(const Factor& f);

WeightLabel vacuum(const GroupSpec& spec);

// Checks shape and level restriction of a label against a spec.
bool label_fits(const GroupSpec& spec, const WeightLabel& label);

// (lambda, mu) for Dynkin vectors of SU(N), with the quadratic-form matrix
// min(i,j) - ij/N (long roots of squared length 2).
Rational bilinear_form(const std::vector<int>& lambda, const std::vector<int>& mu, int rank_n);
Rational bilinear_form(const GroupSpec& spec, const WeightLabel& lambda, const WeightLabel& mu,
                       std::size_t factor);

// c_2 = (lambda, lambda + 2 rho) / 2, summed over factors.
Rational casimir(const GroupSpec& spec, const WeightLabel& label);
Rational casimir(const std::vector<int>& lambda, int rank_n);

WeightLabel conjugate(const WeightLabel& label);

// sum_i i*a_i mod N, one residue per factor.
std::vector<int> nality(const GroupSpec& spec, const WeightLabel& label);
int nality(const std::vector<int>& lambda, int rank_n);

// Central charge k dim(G) / (k + N), summed over factors.
Rational central_charge(const GroupSpec& spec);

// Conformal dimension c_2 / (k + N), summed over factors.
Rational conformal_dimension(const GroupSpec& spec, const WeightLabel& label);

// Action of the basic simple current on one factor: rotation of the
// extended Dynkin diagram (a_0, a_1, ..., a_{N-1}) -> (a_{N-1}, a_0, ..., a_{N-2}).
std::vector<int> simple_current(const std::vector<int>& lambda, int level);

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace wzw

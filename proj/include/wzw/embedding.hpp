#pragma once

// Inclusions H in G_k: diagonal cosets SU(N)_{k1} x SU(N)_{k2} / SU(N)_{k1+k2},
// the type-A conformal inclusions at ambient level 1, and user-supplied
// custom conformal pairs.

#include "wzw/lattice.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace wzw {

enum class EmbeddingKind { Diagonal, ConformalInclusion, Custom };

std::string to_string(EmbeddingKind kind);

struct EmbeddingSpec {
  EmbeddingKind kind = EmbeddingKind::Diagonal;
  GroupSpec ambient;
  GroupSpec sub;
  // Per sub factor. For conformal pairs the sub level is dynkin * ambient level.
  std::vector<int> dynkin;

  // "su2@4:su3@1" (sub:ambient, no spaces)
  std::string name() const;
  // c(ambient) - c(sub), exact
  Rational coset_central_charge() const;
  bool is_conformal() const { return coset_central_charge() == Rational(0); }
};

// An (ambient label, sub label) pair; the index set of coset sectors.
struct LabelPair {
  WeightLabel ambient;
  WeightLabel sub;

  auto operator<=>(const LabelPair&) const = default;
  std::string str() const;  // "(a;b ; c)"
};

using SimpleCurrentOrbit = std::vector<LabelPair>;

// Every catalog member whose ambient SU(M) has M <= bound:
//   SU(N)_{N-2} in SU(N(N-1)/2)_1 for N >= 4,
//   SU(N)_{N+2} in SU(N(N+1)/2)_1 for N >= 2,
//   SU(M)_N x SU(N)_M in SU(NM)_1 for 2 <= M <= N.
std::vector<EmbeddingSpec> catalog(int bound);

// Catalog entry by name, else a custom conformal pair if the name parses and
// the central charges agree; Parse error otherwise.
EmbeddingSpec lookup_inclusion(const std::string& name);

EmbeddingSpec custom_inclusion(const GroupSpec& sub, const GroupSpec& ambient);

// SU(N)_{k1} x SU(N)_{k2} with its diagonal SU(N)_{k1+k2}.
EmbeddingSpec diagonal(int rank_n, int k1, int k2);

// Classifies "ambient / sub" into a diagonal spec, or throws Unsupported
// (conformal pairs are degenerate cosets; other shapes have no provider).
EmbeddingSpec classify_coset(const GroupSpec& ambient, const GroupSpec& sub);

// Throws Unsupported for invalid shapes, c <= 0 cosets, or level mismatches.
void validate(const EmbeddingSpec& spec);

// N-ality congruence for diagonal specs: n(l1) + n(l2) = n(beta) mod N.
bool selection_rule(const EmbeddingSpec& spec, const LabelPair& pair);

// Simultaneous simple-current rotation of all factors on both sides.
LabelPair apply_simple_current(const EmbeddingSpec& spec, const LabelPair& pair);
SimpleCurrentOrbit orbit(const EmbeddingSpec& spec, const LabelPair& pair);

// Orbit of (vacuum, vacuum); Unsupported if it has a fixed point.
SimpleCurrentOrbit vacuum_orbit(const EmbeddingSpec& spec);

// key: value lines for kind, ambient, sub, dynkin.
void write_embedding(std::ostream& os, const EmbeddingSpec& spec);
EmbeddingSpec read_embedding(std::istream& is);

}  // namespace wzw

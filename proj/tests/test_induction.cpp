#include <doctest.h>

#include "wzw/induction.hpp"

#include <sstream>

using namespace wzw;

namespace {

struct Solved {
  EmbeddingSpec spec;
  ModularData sub;
  BranchingTable table;
};

Solved solve(const EmbeddingSpec& e) {
  const auto sub = kac_peterson(e.sub);
  return {e, sub, solve_conformal_inclusion(e, kac_peterson(e.ambient), sub).table};
}

}  // namespace

TEST_CASE("D-type invariant of SU(2)_4") {
  const auto s = solve(lookup_inclusion("su2@4:su3@1"));
  const auto z = z_matrix(s.table);
  const std::vector<std::int64_t> expect{1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1};
  CHECK(z.z == expect);
  CHECK(sector_count_sum(z) == 6);
  const auto rep = verify_invariant(z, s.sub);
  CHECK(rep.pass());
  CHECK(rep.vacuum_one);
  CHECK(rep.symmetric);
  CHECK(rep.nonnegative);
  CHECK(rep.min_eigenvalue > -1e-12);
}

TEST_CASE("identity invariant") {
  const auto sub = kac_peterson(parse_group("su2@5"));
  const auto z = identity_invariant(sub.labels);
  CHECK(verify_invariant(z, sub).pass());
  CHECK(sector_count_sum(z) == 6);
  // the identity embedding gives the identity invariant
  const auto s = solve(lookup_inclusion("su3@1:su3@1"));
  CHECK(z_matrix(s.table) == identity_invariant(s.sub.labels));
}

TEST_CASE("corrupted Z fails") {
  const auto s = solve(lookup_inclusion("su2@4:su3@1"));
  auto z = z_matrix(s.table);
  z(0, 2) += 1;
  const auto rep = verify_invariant(z, s.sub);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.symmetric);
}

TEST_CASE("catalog invariants up to SU(6)_1") {
  for (const auto& e : catalog(6)) {
    const auto s = solve(e);
    const auto z = z_matrix(s.table);
    const auto rep = verify_invariant(z, s.sub);
    CHECK_MESSAGE(rep.pass(), e.name());
    CHECK(rep.vacuum_one);
    CHECK(rep.min_eigenvalue > -1e-9);
    // sum of Z equals sum_i (sum_l b_il)^2
    std::int64_t rows = 0;
    for (std::size_t i = 0; i < s.table.rows.size(); ++i) {
      std::int64_t r = 0;
      for (std::size_t a = 0; a < s.table.cols.size(); ++a) r += s.table.at(i, a);
      rows += r * r;
    }
    CHECK(sector_count_sum(z) == rows);
  }
}

TEST_CASE("Z CSV") {
  const auto s = solve(lookup_inclusion("su2@4:su3@1"));
  std::ostringstream os;
  write_z_csv(os, z_matrix(s.table));
  CHECK(os.str() ==
        "label,\"0\",\"1\",\"2\",\"3\",\"4\"\n\"0\",1,0,0,0,1\n\"1\",0,0,0,0,0\n\"2\",0,0,2,0,0\n\"3\",0,0,0,0,0\n"
        "\"4\",1,0,0,0,1\n");
}

#include <doctest.h>

#include "wzw/errors.hpp"
#include "wzw/fusion.hpp"

#include <algorithm>
#include <sstream>

using namespace wzw;
namespace mp = boost::multiprecision;

namespace {

int su2_rule(int a, int b, int c, int k) {
  return (std::abs(a - b) <= c && c <= std::min(a + b, 2 * k - a - b) && (a + b + c) % 2 == 0) ? 1 : 0;
}

}  // namespace

TEST_CASE("SU(2)_k fusion is the truncated Clebsch-Gordan rule") {
  for (int k = 1; k <= 6; ++k) {
    const auto ring = verlinde(kac_peterson(parse_group("su2@" + std::to_string(k))));
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c)
          CHECK(ring(static_cast<std::size_t>(a), static_cast<std::size_t>(b), static_cast<std::size_t>(c)) ==
                su2_rule(a, b, c, k));
    CHECK(ring.max_residual < 1e-40);
  }
}

TEST_CASE("SU(2)_2 table text") {
  std::ostringstream os;
  write_fusion_table(os, verlinde(kac_peterson(parse_group("su2@2"))));
  CHECK(os.str().find("(1) x (1) = (0) + (2)\n") != std::string::npos);
  CHECK(os.str().find("(2) x (2) = (0)\n") != std::string::npos);
}

TEST_CASE("SU(3)_2 fusion rules") {
  const auto md = kac_peterson(parse_group("su3@2"));
  const auto ring = verlinde(md);
  auto idx = [&](std::vector<int> a) { return md.index_of(WeightLabel{{std::move(a)}}); };
  auto products = [&](std::vector<int> a, std::vector<int> b) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < ring.size(); ++v)
      if (ring(idx(a), idx(b), v)) out.push_back(v);
    return out;
  };
  CHECK(products({1, 0}, {1, 0}) == std::vector<std::size_t>{idx({0, 1}), idx({2, 0})});
  CHECK(products({0, 1}, {1, 0}) == std::vector<std::size_t>{idx({0, 0}), idx({1, 1})});
  CHECK(products({1, 1}, {1, 1}) == std::vector<std::size_t>{idx({0, 0}), idx({1, 1})});
  CHECK(products({0, 2}, {2, 0}) == std::vector<std::size_t>{idx({0, 0})});
  CHECK(products({1, 1}, {2, 0}) == std::vector<std::size_t>{idx({0, 1})});
}

TEST_CASE("quantum dimensions and global index") {
  for (int k = 1; k <= 6; ++k) {
    const auto md = kac_peterson(parse_group("su2@" + std::to_string(k)));
    const auto ring = verlinde(md);
    for (int a = 0; a <= k; ++a)
      CHECK(to_double(ring.d[static_cast<std::size_t>(a)]) ==
            doctest::Approx(std::sin(M_PI * (a + 1) / (k + 2)) / std::sin(M_PI / (k + 2))).epsilon(1e-13));
  }
  const auto su24 = kac_peterson(parse_group("su2@4"));
  const auto r24 = verlinde(su24);
  CHECK(to_double(global_index(r24, su24)) == doctest::Approx(12).epsilon(1e-14));
  CHECK(to_double(r24.d[1]) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(to_double(r24.d[2]) == doctest::Approx(2).epsilon(1e-14));
  const auto su31 = kac_peterson(parse_group("su3@1"));
  CHECK(to_double(global_index(verlinde(su31), su31)) == doctest::Approx(3).epsilon(1e-14));
  const auto su42 = kac_peterson(parse_group("su4@2"));
  CHECK(to_double(global_index(verlinde(su42), su42)) == doctest::Approx(24).epsilon(1e-13));
  const auto su32 = kac_peterson(parse_group("su3@2"));
  const auto r32 = verlinde(su32);
  CHECK(to_double(global_index(r32, su32)) == doctest::Approx(10.854101966249685).epsilon(1e-13));
  CHECK(to_double(r32.d[1]) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-14));
  CHECK(dimension_character_residual(r32) < 1e-40);
}

TEST_CASE("factorized and direct Verlinde agree on products") {
  const auto md = kac_peterson(parse_group("su2@2 x su3@2"));
  const auto fact = verlinde(md);
  const auto direct = verlinde_direct(md);
  CHECK(fact.coeffs == direct.coeffs);
  CHECK(to_double(mp::abs(fact.mu - direct.mu)) < 1e-40);
  CHECK(to_double(global_index(fact, md)) == doctest::Approx(4 * 10.854101966249685).epsilon(1e-13));
}

TEST_CASE("exact ring identities") {
  for (const char* s : {"su2@5", "su3@3", "su4@2", "su2@1 x su3@1"}) {
    const auto md = kac_peterson(parse_group(s));
    const auto ring = verlinde(md);
    CHECK(check_vacuum_identity(ring));
    CHECK(check_symmetries(ring, md.conj));
    CHECK(check_associativity(ring));
  }
}

TEST_CASE("a corrupted coefficient breaks associativity") {
  auto ring = verlinde(kac_peterson(parse_group("su2@3")));
  const std::size_t n = ring.size();
  ring.coeffs[(1 * n + 1) * n + 2] = 0;
  ring.coeffs[(1 * n + 1) * n + 0] = 0;
  CHECK_FALSE(check_associativity(ring));
}

TEST_CASE("integrality failure escalates precision, then throws") {
  const auto good = kac_peterson(parse_group("su2@3"));
  std::vector<int> requested;
  auto corrupt = [](ModularData md) {
    PrecisionGuard g(md.digits);
    md.S(1, 1) = md.S(1, 1) + Cplx(Real("0.01"));
    return md;
  };
  ModularProvider provider = [&](int digits) {
    requested.push_back(digits);
    return corrupt(kac_peterson(parse_group("su2@3"), digits));
  };
  VerlindeOptions opts;
  try {
    verlinde(corrupt(good), provider, opts);
    FAIL("expected an integrality error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Integrality);
  }
  CHECK(requested == std::vector<int>{100, 200});
}

TEST_CASE("Y-matrix and sigma-tilde") {
  for (const char* s : {"su2@1", "su2@2", "su2@4", "su3@1", "su3@2"}) {
    const auto md = kac_peterson(parse_group(s));
    const auto ring = verlinde(md);
    const auto y = y_matrix(md, ring);
    CHECK(y.vacuum_ratio_residual < 1e-40);
    CHECK(y.symmetry_residual < 1e-40);
    const auto st = sigma_tilde(md, ring);
    CHECK(st.residual < 1e-40);
  }
  // the column-normalized ratio only matches when every dimension is 1
  const auto su21 = kac_peterson(parse_group("su2@1"));
  CHECK(y_matrix(su21, verlinde(su21)).column_ratio_residual < 1e-40);
  const auto su22 = kac_peterson(parse_group("su2@2"));
  CHECK(y_matrix(su22, verlinde(su22)).column_ratio_residual == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-12));
}

TEST_CASE("fusion CSV") {
  std::ostringstream os;
  write_fusion_csv(os, verlinde(kac_peterson(parse_group("su2@1"))));
  CHECK(os.str() == "lambda,mu,nu,N\n\"0\",\"0\",\"0\",1\n\"0\",\"1\",\"1\",1\n\"1\",\"0\",\"1\",1\n\"1\",\"1\",\"0\",1\n");
}

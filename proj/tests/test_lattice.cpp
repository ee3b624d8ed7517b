#include <doctest.h>

#include "wzw/errors.hpp"
#include "wzw/lattice.hpp"

#include <algorithm>
#include <functional>

using namespace wzw;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Io;
}

WeightLabel lab(std::vector<int> a) { return WeightLabel{{std::move(a)}}; }

}  // namespace

TEST_CASE("group specs parse and print") {
  CHECK(parse_group("su2@4").str() == "su2@4");
  CHECK(parse_group(" su2@1 x su3@2 ").str() == "su2@1 x su3@2");
  CHECK(parse_group("su2@1xsu2@1").size() == 2);
  for (const char* bad : {"su2@", "su@1", "sv2@1", "", "su2@1 x", "su2@1 y su2@1", "su2@-1"})
    CHECK_MESSAGE(kind_of([&] { parse_group(bad); }) == ErrorKind::Parse, bad);
  CHECK_THROWS_AS(parse_group("su1@1"), Error);
  CHECK_THROWS_AS(parse_group("su2@0"), Error);
}

TEST_CASE("labels round-trip through text") {
  const auto l = parse_label("1,0;2");
  REQUIRE(l.parts.size() == 2);
  CHECK(l.parts[0] == std::vector<int>{1, 0});
  CHECK(l.parts[1] == std::vector<int>{2});
  CHECK(l.str() == "1,0;2");
  CHECK_THROWS_AS(parse_label("1,,0"), Error);
}

TEST_CASE("weight enumeration counts and order") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= 6; ++k) {
      const auto w = enumerate_weights(GroupSpec({Factor{n, k}}));
      CHECK(w.size() == binomial(static_cast<std::size_t>(k + n - 1), static_cast<std::size_t>(n - 1)));
      CHECK(w.front() == vacuum(GroupSpec({Factor{n, k}})));
      CHECK(std::is_sorted(w.begin(), w.end()));
    }
  CHECK(enumerate_weights(GroupSpec({Factor{4, 6}})).size() == 84);
  CHECK(enumerate_weights(parse_group("su2@6 x su3@6")).size() == 7 * 28);
  const auto su3 = enumerate_weights(GroupSpec({Factor{3, 1}}));
  REQUIRE(su3.size() == 3);
  CHECK(su3[1] == lab({0, 1}));
  CHECK(su3[2] == lab({1, 0}));
}

TEST_CASE("conformal dimensions") {
  for (int k = 1; k <= 6; ++k) {
    const GroupSpec g({Factor{2, k}});
    for (int a = 0; a <= k; ++a)
      CHECK(conformal_dimension(g, lab({a})) == Rational(a * (a + 2), 4 * (k + 2)));
  }
  CHECK(conformal_dimension(GroupSpec({Factor{3, 1}}), lab({1, 0})) == Rational(1, 3));
  CHECK(conformal_dimension(GroupSpec({Factor{3, 2}}), lab({1, 1})) == Rational(3, 5));
  CHECK(conformal_dimension(GroupSpec({Factor{4, 1}}), lab({0, 1, 0})) == Rational(1, 2));
  // invariant under conjugation
  for (const auto& l : enumerate_weights(GroupSpec({Factor{4, 3}})))
    CHECK(conformal_dimension(GroupSpec({Factor{4, 3}}), l) ==
          conformal_dimension(GroupSpec({Factor{4, 3}}), conjugate(l)));
}

TEST_CASE("central charges") {
  CHECK(central_charge(parse_group("su2@1")) == Rational(1));
  CHECK(central_charge(parse_group("su3@2")) == Rational(16, 5));
  CHECK(central_charge(parse_group("su2@1 x su2@1")) == Rational(2));
  CHECK(central_charge(parse_group("su2@4")) == central_charge(parse_group("su3@1")));
}

TEST_CASE("bilinear form") {
  CHECK(bilinear_form({1}, {1}, 2) == Rational(1, 2));
  CHECK(bilinear_form({1, 0}, {1, 0}, 3) == Rational(2, 3));
  CHECK(bilinear_form({1, 0}, {0, 1}, 3) == Rational(1, 3));
  CHECK(kind_of([] { bilinear_form({1}, {1, 0}, 3); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("conjugation, N-ality and simple currents") {
  CHECK(conjugate(lab({2, 0, 1})) == lab({1, 0, 2}));
  CHECK(nality({1, 0}, 3) == 1);
  CHECK(nality({0, 1}, 3) == 2);
  CHECK(nality({1, 1, 1}, 4) == 2);
  for (int k = 1; k <= 6; ++k)
    for (int a = 0; a <= k; ++a) CHECK(simple_current({a}, k) == std::vector<int>{k - a});
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : enumerate_factor_weights(Factor{n, 3})) {
      std::vector<int> x = w;
      for (int i = 0; i < n; ++i) x = simple_current(x, 3);
      CHECK(x == w);
      CHECK(nality(simple_current(w, 3), n) == (nality(w, n) + 3) % n);
    }
}

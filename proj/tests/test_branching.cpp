#include <doctest.h>

#include "wzw/branching.hpp"
#include "wzw/errors.hpp"

#include <functional>
#include <sstream>

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

SolverResult solve(const std::string& name, SolverOptions opts = {}) {
  const auto e = lookup_inclusion(name);
  return solve_conformal_inclusion(e, kac_peterson(e.ambient), kac_peterson(e.sub), opts);
}

std::string listing(const BranchingTable& t) {
  std::string s;
  for (const auto& p : t.exp()) s += p.str() + "=" + std::to_string(t.at(p)) + " ";
  return s;
}

// Ising characters from fermionic products; exponents relative to the leading term.
const std::vector<std::int64_t> kChi0{1, 0, 1, 1, 2, 2, 3, 3, 5, 5, 7, 8, 11, 12, 16, 18, 23, 26, 33, 37, 46};
const std::vector<std::int64_t> kChiHalf{1, 1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 9, 12, 14, 17, 20, 25, 29, 35, 41};
const std::vector<std::int64_t> kChiSixteenth{1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27, 32, 38, 46, 54, 64};

LabelPair pair2(int a, int b, int c) { return LabelPair{WeightLabel{{{a}, {b}}}, WeightLabel{{{c}}}}; }

void check_series(const QSeries& s, const Rational& leading, const std::vector<std::int64_t>& expect) {
  const auto terms = s.terms_through(leading + 19);
  REQUIRE(!terms.empty());
  CHECK(terms.begin()->first == leading);
  for (std::size_t n = 0; n < 20; ++n) {
    const Rational e = leading + static_cast<std::int64_t>(n);
    const auto it = terms.find(e);
    CHECK_MESSAGE((it == terms.end() ? 0 : it->second) == expect[n], "exponent " << format_rational(e));
  }
}

}  // namespace

TEST_CASE("SU(2)_4 in SU(3)_1") {
  const auto r = solve("su2@4:su3@1");
  CHECK(listing(r.table) == "(0,0 ; 0)=1 (0,0 ; 4)=1 (0,1 ; 2)=1 (1,0 ; 2)=1 ");
  CHECK(r.nullspace_dim == 1);
  CHECK(r.s_residual < 1e-40);
  CHECK(r.t_residual < 1e-40);
}

TEST_CASE("SU(2)_2 x SU(2)_2 in SU(4)_1") {
  const auto r = solve("su2@2xsu2@2:su4@1");
  CHECK(listing(r.table) ==
        "(0,0,0 ; 0;0)=1 (0,0,0 ; 2;2)=1 (0,0,1 ; 1;1)=1 (0,1,0 ; 0;2)=1 (0,1,0 ; 2;0)=1 (1,0,0 ; 1;1)=1 ");
}

TEST_CASE("catalog inclusions up to SU(6)_1 solve") {
  for (const auto& e : catalog(6)) {
    const auto r = solve_conformal_inclusion(e, kac_peterson(e.ambient), kac_peterson(e.sub));
    CHECK(r.s_residual < 1e-40);
    CHECK(r.t_residual < 1e-40);
    CHECK_NOTHROW(check_table(r.table));
  }
  const auto su35 = solve("su3@5:su6@1");
  CHECK(su35.conjugate_solutions == 2);
  // the fundamental of SU(6) restricts to the symmetric square plus (2,3)
  const WeightLabel fund{{{1, 0, 0, 0, 0}}};
  CHECK(su35.table.at(LabelPair{fund, WeightLabel{{{2, 0}}}}) == 1);
  CHECK(su35.table.at(LabelPair{fund, WeightLabel{{{2, 3}}}}) == 1);
}

TEST_CASE("solver errors") {
  SolverOptions tight;
  tight.entry_bound = 0;
  CHECK(kind_of([&] { solve("su2@4:su3@1", tight); }) == ErrorKind::Infeasible);
  const auto d = diagonal(2, 1, 1);
  CHECK(kind_of([&] { solve_conformal_inclusion(d, kac_peterson(d.ambient), kac_peterson(d.sub)); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("table validation") {
  auto t = solve("su2@4:su3@1").table;
  auto neg = t;
  neg.at(1, 1) = -1;
  CHECK(kind_of([&] { check_table(neg); }) == ErrorKind::InvalidArgument);
  auto vac = t;
  vac.at(0, 0) = 2;
  CHECK(kind_of([&] { check_table(vac); }) == ErrorKind::InvalidArgument);
  auto cong = t;
  cong.at(0, 1) = 1;
  CHECK(kind_of([&] { check_table(cong); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("table files") {
  const auto t = solve("su2@2xsu2@2:su4@1").table;
  std::stringstream ss;
  write_table(ss, t);
  CHECK(ss.str().rfind("ambient: su4@1\nsub: su2@2 x su2@2\n0,0,0 ; 0;0 ; 1\n", 0) == 0);
  CHECK(read_table(ss) == t);

  auto parse_kind = [](const std::string& text) {
    std::istringstream is(text);
    return kind_of([&] { read_table(is); });
  };
  CHECK(parse_kind("ambient: su3@1\nsub: su2@4\n0,0 ; 0 ; 1\n0,0 ; 0 ; 1\n") == ErrorKind::Parse);
  CHECK(parse_kind("ambient: su3@1\nsub: su2@4\n0,0 ; 0\n") == ErrorKind::Parse);
  CHECK(parse_kind("ambient: su3@1\nsub: su2@4\n0,0 ; 0 ; one\n") == ErrorKind::Parse);
  CHECK(parse_kind("ambient: su3@1\nsub: su2@4\n0,0 ; 7 ; 1\n") == ErrorKind::Parse);
  CHECK(parse_kind("sub: su2@4\n0,0 ; 0 ; 1\n") == ErrorKind::Parse);
  CHECK(parse_kind("ambient: su3@1\nsub: su2@4\n0,0 ; 0 ; 1\n0,1 ; 0 ; 1\n") == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { load_table("/nonexistent/table.txt"); }) == ErrorKind::Io);
}

TEST_CASE("SU(2) characters") {
  const auto chi = su2_characters(1, 12);
  // vacuum module: grade 1 is the adjoint
  CHECK(chi[0][0] == std::map<int, std::int64_t>{{0, 1}});
  CHECK(chi[0][1] == std::map<int, std::int64_t>{{-2, 1}, {0, 1}, {2, 1}});
  // specialized at z = 1: sum_n q^{n^2} / prod (1 - q^j)
  std::vector<std::int64_t> theta(13, 0), expect(13, 0);
  for (int n = -3; n <= 3; ++n)
    if (n * n <= 12) theta[static_cast<std::size_t>(n * n)] += 1;
  std::vector<std::int64_t> part(13, 0);
  part[0] = 1;
  for (int j = 1; j <= 12; ++j)
    for (int g = j; g <= 12; ++g) part[static_cast<std::size_t>(g)] += part[static_cast<std::size_t>(g - j)];
  for (int g = 0; g <= 12; ++g)
    for (int h = 0; h <= g; ++h)
      expect[static_cast<std::size_t>(g)] += theta[static_cast<std::size_t>(h)] * part[static_cast<std::size_t>(g - h)];
  for (int g = 0; g <= 12; ++g) {
    std::int64_t total = 0;
    for (const auto& [w, c] : chi[0][static_cast<std::size_t>(g)]) total += c;
    CHECK(total == expect[static_cast<std::size_t>(g)]);
  }
  CHECK_THROWS_AS(su2_characters(1, 41), Error);
}

TEST_CASE("Ising branching functions") {
  const auto o = su2_diagonal_branching_oracle(1, 1, 20);
  check_series(o.branching.at(pair2(0, 0, 0)), Rational(0), kChi0);
  check_series(o.branching.at(pair2(1, 1, 2)), Rational(0), kChi0);
  check_series(o.branching.at(pair2(0, 0, 2)), Rational(1, 2), kChiHalf);
  check_series(o.branching.at(pair2(1, 1, 0)), Rational(1, 2), kChiHalf);
  check_series(o.branching.at(pair2(1, 0, 1)), Rational(1, 16), kChiSixteenth);
  check_series(o.branching.at(pair2(0, 1, 1)), Rational(1, 16), kChiSixteenth);
  CHECK(o.branching.at(pair2(0, 0, 1)).is_zero());
  CHECK(o.support.size() == 6);
}

TEST_CASE("oracle agrees with selection rule and vacuum orbit") {
  for (int k1 = 1; k1 <= 2; ++k1)
    for (int k2 = 1; k2 <= 2; ++k2) {
      const auto o = su2_diagonal_branching_oracle(k1, k2, 20);
      CHECK(o.support_matches_selection_rule);
      CHECK(o.vacuum_equal_matches_orbit);
    }
}

TEST_CASE("series equality compares the overlap") {
  QSeries a{Rational(0), {1, 0, 1, 1}};
  QSeries b{Rational(0), {1, 0, 1}};
  CHECK(series_equal(a, b));
  QSeries c{Rational(1, 2), {1, 0, 1}};
  CHECK_FALSE(series_equal(a, c));
  QSeries d{Rational(-1), {0, 1, 0, 1, 1, 7}};
  CHECK(series_equal(a, d));
}

TEST_CASE("diagonal vacuum multiplicities") {
  const auto m = diagonal_vacuum_multiplicities(diagonal(2, 1, 1));
  CHECK(listing(m) == "(0;0 ; 0)=1 (1;1 ; 2)=1 ");
}

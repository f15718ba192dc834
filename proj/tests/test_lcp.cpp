#include <doctest.h>

#include <cstdlib>

#include "bandq/classes.hpp"
#include "bandq/degree.hpp"
#include "bandq/error.hpp"
#include "bandq/lcp.hpp"
#include "bandq/oracle.hpp"
#include "bandq/simplex.hpp"
#include "helpers.hpp"

using namespace bandq;

namespace {

bool contains(const LcpSolveResult& r, const RationalVector& x) {
  for (const auto& s : r.solutions)
    if (s.x == x) return true;
  return false;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("simplex feasibility") {
  FeasibilitySystem a(2);
  a.add_equality({1, 1}, 1);
  auto x = solve_feasibility(a);
  REQUIRE(x);
  CHECK(satisfies(a, *x));

  FeasibilitySystem b(1);
  b.add_inequality({-1}, 1);  // x1 <= -1
  CHECK_FALSE(solve_feasibility(b));

  FeasibilitySystem c(1);  // R0 system for the identity, I = {1}
  c.add_equality({1}, 1);
  c.add_equality({1}, 0);
  CHECK_FALSE(solve_feasibility(c));

  FeasibilitySystem d(3);
  d.add_inequality({1, -1, 0}, 2);
  d.add_inequality({0, 1, -1}, Rational(1, 3));
  d.add_equality({1, 1, 1}, 5);
  auto y = solve_feasibility(d);
  REQUIRE(y);
  CHECK(satisfies(d, *y));
}

TEST_CASE("solve_lcp examples") {
  auto r = solve_lcp({RationalMatrix::identity(2), {-1, -1}});
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0].x == RationalVector{1, 1});
  CHECK(r.solutions[0].support == 3u);
  CHECK(r.solutions[0].nondegenerate);
  CHECK(r.solutions[0].support_det_sign == 1);

  CHECK(solve_lcp({RationalMatrix{{1, -1, 1}, {0, 1, -1}, {1, 0, 0}}, {0, 0, -1}}).solutions.empty());
  CHECK(solve_lcp({RationalMatrix{{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, -1}, {1, 0, 0, 0}}, {0, 0, 0, -1}})
            .solutions.empty());

  auto t4 = solve_lcp({RationalMatrix{{-1, 1, 0}, {0, -1, 1}, {-1, 0, 1}}, {1, 1, 1}});
  CHECK(contains(t4, {0, 0, 0}));
  CHECK(contains(t4, {0, 1, 0}));
}

TEST_CASE("solve_lcp flags singular families") {
  // A = 0, q = 0: every x >= 0 solves; supports are singular.
  RationalMatrix z(2);
  auto r = solve_lcp({z, {0, 0}});
  CHECK(r.has_singular_family);
  for (const auto& s : r.solutions) CHECK(is_lcp_solution(z, {0, 0}, s.x));
}

TEST_CASE("solve_lcp completeness on random instances") {
  std::mt19937_64 rng(29);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int t = 0; t < 30; ++t) {
      auto a = testing::random_matrix(n, 4, rng);
      auto q = testing::random_vector(n, 4, rng);
      auto par = solve_lcp({a, q}, Exec::Parallel);
      auto ser = solve_lcp({a, q}, Exec::Serial);
      REQUIRE(par.solutions.size() == ser.solutions.size());
      for (std::size_t i = 0; i < par.solutions.size(); ++i) CHECK(par.solutions[i].x == ser.solutions[i].x);
      for (const auto& s : par.solutions) CHECK(is_lcp_solution(a, q, s.x));
      SupportTable table(a);
      auto tab = table.solve(q);
      CHECK(tab.solutions.size() == par.solutions.size());
      CHECK(table.find_solution(q).has_value() == !par.solutions.empty());
      // Brute-force grid over small integer/half-integer points.
      if (n <= 3) {
        std::vector<long> grid;
        for (long g = 0; g <= 16; ++g) grid.push_back(g);
        RationalVector x(n);
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= grid.size();
        for (std::size_t code = 0; code < total; ++code) {
          for (std::size_t i = 0, c = code; i < n; ++i, c /= grid.size()) {
            x[i] = Rational(grid[c % grid.size()], 2);
            x[i].canonicalize();
          }
          if (is_lcp_solution(a, q, x) && !par.has_singular_family) CHECK(contains(par, x));
        }
      }
    }
}

TEST_CASE("enumeration cap") {
  CHECK(enumeration_cap() == 16);
  setenv("LCP_ENUM_CAP", "3", 1);
  CHECK(enumeration_cap() == 3);
  CHECK(code_of([] { solve_lcp({RationalMatrix::identity(4), {1, 1, 1, 1}}); }) == ErrorCode::CapExceeded);
  CHECK(code_of([] { is_P(RationalMatrix::identity(4)); }) == ErrorCode::CapExceeded);
  unsetenv("LCP_ENUM_CAP");
  CHECK(code_of([] { solve_lcp({RationalMatrix::identity(17), RationalVector(17, Rational(1))}); }) ==
        ErrorCode::CapExceeded);
}

TEST_CASE("R0") {
  CHECK(is_R0(RationalMatrix::identity(3)).yes());
  auto v = is_R0(RationalMatrix{{0, 1}, {0, 1}});
  CHECK(v.no());
  CHECK(v.certificate.vectors.at("x") == RationalVector{1, 0});
  CHECK(is_R0(RationalMatrix{{-1, 1, 0}, {0, -1, 1}, {2, 0, -1}}).yes());  // Type III, det = 1
}

TEST_CASE("R(d)") {
  CHECK(is_Rd(RationalMatrix::identity(2), {1, 1}).yes());
  auto v = is_Rd(RationalMatrix{{-1, 2}, {1, -1}}, {2, 3});
  CHECK(v.no());
  auto x = v.certificate.vectors.at("x");
  CHECK((x == RationalVector{2, 0} || x == RationalVector{0, 3}));
  RationalMatrix t4{{-1, 1, 0}, {0, -1, 1}, {-2, 0, 1}};
  auto w = is_Rd(t4, {1, 1, 1});
  CHECK(w.no());
  CHECK(is_lcp_solution(t4, {1, 1, 1}, w.certificate.vectors.at("x")));
  CHECK(code_of([] { is_Rd(RationalMatrix::identity(2), {1, 0}); }) == ErrorCode::NotPositive);
}

TEST_CASE("E0 and E") {
  CHECK(is_E0(RationalMatrix{{1, 2}, {3, 4}}).yes());
  auto v = is_E0(RationalMatrix{{-1, 0}, {0, -1}});
  CHECK(v.no());
  CHECK(v.certificate.vectors.at("x") == RationalVector{1, 0});
  // x = (1, 1) is not a witness for this matrix: x2 (Ax)2 = 1 > 0.
  RationalMatrix a{{1, -1}, {1, 0}};
  auto e = is_E(a);
  CHECK(e.no());
  auto x = e.certificate.vectors.at("x");
  auto ax = a * x;
  bool any_positive = false, nonzero = false;
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(x[i] >= 0);
    nonzero |= x[i] != 0;
    if (x[i] != 0 && x[i] * ax[i] > 0) any_positive = true;
  }
  CHECK(nonzero);
  CHECK_FALSE(any_positive);
  CHECK(is_E(RationalMatrix::identity(3)).yes());
}

TEST_CASE("S") {
  RationalMatrix a{{1, -1}, {1, 0}};
  auto v = is_S(a);
  REQUIRE(v.yes());
  auto x = v.certificate.vectors.at("x");
  auto ax = a * x;
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(x[i] > 0);
    CHECK(ax[i] > 0);
  }
  CHECK(is_S(RationalMatrix{{-1, 0}, {0, -1}}).no());
}

TEST_CASE("minor-based and sign classes") {
  CHECK(is_P(RationalMatrix{{1, 7, -3}, {0, 2, 5}, {0, 0, 1}}).yes());
  CHECK(is_P(RationalMatrix{{0, 1}, {0, 1}}).no());
  CHECK(is_P0(RationalMatrix{{0, 1}, {0, 1}}).yes());
  CHECK(is_Z(RationalMatrix{{2, -1, 0}, {0, 2, -1}, {-1, 0, 2}}).yes());
  CHECK(is_Z(RationalMatrix{{2, 1}, {0, 2}}).no());
  CHECK(is_Rstar(RationalMatrix{{1, 4}, {0, 2}}).yes());
  CHECK(is_Rstar(RationalMatrix{{-1, 2}, {1, -1}}).no());
  CHECK(is_Rstar(RationalMatrix::identity(3)).yes());
}

TEST_CASE("serial and parallel class tests agree") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    auto a = testing::random_matrix(4, 2, rng);
    auto pr = is_R0(a, Exec::Parallel), sr = is_R0(a, Exec::Serial);
    CHECK(pr.answer == sr.answer);
    CHECK(pr.certificate.vectors == sr.certificate.vectors);
    auto pe = is_E0(a, Exec::Parallel), se = is_E0(a, Exec::Serial);
    CHECK(pe.certificate.vectors == se.certificate.vectors);
    CHECK(is_P(a, Exec::Parallel).certificate.vectors == is_P(a, Exec::Serial).certificate.vectors);
  }
}

TEST_CASE("class witnesses are genuine") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 80; ++t) {
    auto a = testing::random_matrix(3, 2, rng);
    if (auto r = is_R0(a); r.no()) {
      auto x = r.certificate.vectors.at("x");
      CHECK(is_lcp_solution(a, RationalVector(3), x));
      CHECK(x != RationalVector(3));
    }
    if (auto e = is_E0(a); e.no()) {
      auto x = e.certificate.vectors.at("x");
      auto ax = a * x;
      for (std::size_t i = 0; i < 3; ++i)
        if (x[i] > 0) CHECK(ax[i] < 0);
    }
  }
}

TEST_CASE("class chain") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 80; ++t) {
    auto a = testing::random_matrix(3, 3, rng);
    if (is_P(a).yes()) {
      CHECK(is_E(a).yes());
      CHECK(is_R0(a).yes());
      CHECK(is_Rd(a, {1, 1, 1}).yes());
    }
    if (is_E(a).yes()) CHECK(is_Rd(a, {1, 1, 1}).yes());
    if (is_Rstar(a).yes()) {
      CHECK(is_R0(a).yes());
      CHECK(is_E0(a).yes());
    }
    if (q_oracle(a, {256, 1, Exec::Parallel}).yes()) CHECK(is_S(a).yes());
  }
}

TEST_CASE("degree") {
  CHECK(degree(RationalMatrix::identity(3)) == 1);
  CHECK(degree(RationalMatrix{{-1, 2}, {1, -1}}) == -1);
  CHECK(code_of([] { degree(RationalMatrix{{0, 1}, {0, 1}}); }) == ErrorCode::NotR0);
  std::mt19937_64 rng(43);
  int tested = 0;
  for (int t = 0; t < 200 && tested < 40; ++t) {
    auto a = testing::random_matrix(3, 3, rng);
    if (!is_R0(a).yes()) continue;
    ++tested;
    int d1 = degree(a, {1}), d2 = degree(a, {2}), d3 = degree(a, {99});
    CHECK(d1 == d2);
    CHECK(d1 == d3);
    CHECK(degree(a, {5, 64, Exec::Serial}) == d1);
    if (is_Rd(a, {1, 1, 1}).yes()) CHECK(d1 == 1);
  }
  CHECK(tested > 10);
}

TEST_CASE("q_oracle examples") {
  CHECK(q_oracle(RationalMatrix{{1, -1}, {1, 0}}).yes());
  RationalMatrix bad{{1, -1, 1}, {0, 1, -1}, {1, 0, 0}};
  auto v = q_oracle(bad);
  REQUIRE(v.no());
  CHECK(solve_lcp({bad, v.certificate.vectors.at("q")}).solutions.empty());
  CHECK(q_oracle(RationalMatrix{{-1, 0}, {0, -1}}).no());
  CHECK(q_oracle(RationalMatrix::identity(4)).yes());
}

TEST_CASE("q_oracle witnesses and determinism") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 40; ++t) {
    auto a = testing::random_matrix(3, 2, rng);
    auto p = q_oracle(a, {128, 3, Exec::Parallel});
    auto s = q_oracle(a, {128, 3, Exec::Serial});
    CHECK(p.answer == s.answer);
    CHECK(p.certificate.vectors == s.certificate.vectors);
    if (p.no()) CHECK(solve_lcp({a, p.certificate.vectors.at("q")}).solutions.empty());
  }
}

TEST_CASE("P0: Q iff R0") {
  std::mt19937_64 rng(53);
  int tested = 0;
  for (int t = 0; t < 400 && tested < 40; ++t) {
    auto a = testing::random_matrix(3, 2, rng);
    if (!is_P0(a).yes()) continue;
    ++tested;
    auto q = q_oracle(a, {256, 1, Exec::Parallel});
    if (q.decided()) CHECK(q.yes() == is_R0(a).yes());
  }
  CHECK(tested > 10);
}

TEST_CASE("block propagation and degree product") {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<long> nonneg(0, 3);
  int tested = 0;
  for (int t = 0; t < 300 && tested < 25; ++t) {
    auto b = testing::random_matrix(2, 3, rng);
    RationalMatrix e(2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) e(i, j) = nonneg(rng);  // E >= 0
    RationalMatrix a(4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        a(i, j) = b(i, j);
        a(i + 2, j + 2) = e(i, j);
        a(i, j + 2) = testing::random_vector(1, 3, rng)[0];
        a(i + 2, j) = nonneg(rng);  // D >= 0
      }
    bool rb = is_R0(b).yes(), re = is_R0(e).yes();
    if (rb && re) {
      CHECK(is_R0(a).yes());
      CHECK(degree(a) == degree(b) * degree(e));
      ++tested;
    }
    if (q_oracle(a, {256, 1, Exec::Parallel}).yes()) CHECK_FALSE(q_oracle(b, {256, 1, Exec::Parallel}).no());
  }
  CHECK(tested > 5);
}

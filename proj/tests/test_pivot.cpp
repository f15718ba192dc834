#include <doctest.h>

#include "bandq/classes.hpp"
#include "bandq/degree.hpp"
#include "bandq/error.hpp"
#include "bandq/generate.hpp"
#include "bandq/oracle.hpp"
#include "bandq/pivot.hpp"
#include "bandq/structure.hpp"
#include "helpers.hpp"

using namespace bandq;
using testing::error_code_of;

namespace {

RationalMatrix identity(std::size_t n) {
  RationalMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 1;
  return a;
}

std::vector<std::size_t> random_subset(std::size_t n, std::mt19937_64& rng, bool allow_full) {
  for (;;) {
    std::vector<std::size_t> j;
    for (std::size_t i = 0; i < n; ++i)
      if (rng() % 2) j.push_back(i);
    if (!j.empty() && (allow_full || j.size() < n)) return j;
  }
}

}  // namespace

TEST_CASE("schur complement of the identity") {
  auto i4 = identity(4);
  CHECK(schur_complement(i4, {1}) == identity(3));
  CHECK(schur_complement(i4, {0, 3}) == identity(2));
  CHECK(ppt(i4, {0, 2}) == i4);
  CHECK(ppt(i4, {0, 1, 2, 3}) == i4);
}

TEST_CASE("schur complement of a Type IV matrix on its last entry") {
  RationalMatrix a{{-1, 1, 0}, {0, -1, 1}, {-2, 0, 1}};
  auto s = schur_complement(a, {2});
  CHECK(s == RationalMatrix{{-1, 1}, {2, -1}});
  // southwest entry -a_n1 a_(n-1)n / a_nn
  CHECK(s(1, 0) == -a(2, 0) * a(1, 2) / a(2, 2));
}

TEST_CASE("pivot errors") {
  RationalMatrix a{{0, 1}, {1, 0}};
  CHECK(error_code_of([&] { schur_complement(a, {0}); }) == ErrorCode::SingularPivot);
  CHECK(error_code_of([&] { ppt(a, {1}); }) == ErrorCode::SingularPivot);
  CHECK(error_code_of([&] { ppt(a, {}); }) == ErrorCode::InvalidArgument);
  CHECK(error_code_of([&] { schur_complement(a, {0, 1}); }) == ErrorCode::InvalidArgument);
  CHECK(error_code_of([&] { ppt(a, {2}); }) == ErrorCode::IndexOutOfRange);
  // Full pivot set is just the inverse.
  CHECK(ppt(a, {0, 1}) == *inverse(a));
}

TEST_CASE("block split labels") {
  RationalMatrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  auto s = BlockSplit::of(a, {2, 0, 2});
  CHECK(s.pivot == std::vector<std::size_t>{0, 2});
  CHECK(s.others == std::vector<std::size_t>{1});
  CHECK(s.b[0][0] == 5);
  CHECK(s.e[1][0] == 7);
  CHECK(s.c[0][1] == 6);
  CHECK(s.d[0][0] == 2);
}

TEST_CASE("random pivots") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 2 + t % 4;
    auto a = testing::random_matrix(n, 3, rng);
    auto j = random_subset(n, rng, false);
    Rational det_e = determinant(principal_submatrix(a, j));
    if (det_e == 0) {
      CHECK(error_code_of([&] { ppt(a, j); }) == ErrorCode::SingularPivot);
      continue;
    }
    ++checked;
    CHECK(determinant(a) == determinant(schur_complement(a, j)) * det_e);
    auto t1 = ppt(a, j);
    CHECK(ppt(t1, j) == a);
    CHECK(is_R0(a).yes() == is_R0(t1).yes());
  }
  CHECK(checked > 100);
}

TEST_CASE("5x5 determinant identity") {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 40; ++t) {
    auto a = testing::random_matrix(5, 4, rng);
    auto j = random_subset(5, rng, false);
    if (determinant(principal_submatrix(a, j)) == 0) continue;
    CHECK(determinant(a) == determinant(schur_complement(a, j)) * determinant(principal_submatrix(a, j)));
  }
}

TEST_CASE("Q and degree are carried through the pivot") {
  std::mt19937_64 rng(77);
  const OracleOptions opts{1024, 3, Exec::Parallel};
  int q_compared = 0, deg_compared = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 3 + t % 2;
    auto a = testing::random_matrix(n, 3, rng);
    auto j = random_subset(n, rng, true);
    Rational det_e = determinant(principal_submatrix(a, j));
    if (det_e == 0) continue;
    auto t1 = ppt(a, j);
    auto qa = q_oracle(a, opts), qt = q_oracle(t1, opts);
    if (qa.decided() && qt.decided()) {
      ++q_compared;
      CHECK(qa.answer == qt.answer);
    }
    if (is_R0(a).yes()) {
      ++deg_compared;
      CHECK(degree_unchecked(t1) == degree_unchecked(a) * sgn(det_e));
    }
  }
  CHECK(q_compared > 50);
  CHECK(deg_compared > 50);
}

TEST_CASE("Type IV recursion step") {
  std::mt19937_64 rng(404);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 3 + t % 4;
    auto a = generate_one(InstanceType::BdswType4, n, 5, rng);
    if (!(a(n - 1, n - 1) > 0)) continue;
    auto t1 = ppt(a, {n - 1});
    for (std::size_t j = 0; j + 1 < n; ++j) CHECK(t1(n - 1, j) >= 0);
    CHECK(t1(n - 1, n - 1) > 0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) k += a(i, i) < 0;
    auto s = detect_structure(schur_complement(a, {n - 1}));
    CHECK(s.tag == (k == n - 1 ? StructureTag::BdswTypeIII : StructureTag::BdswTypeIV));
  }
}

#include <doctest.h>

#include "bandq/classes.hpp"
#include "bandq/classifier.hpp"
#include "bandq/degree.hpp"
#include "bandq/generate.hpp"
#include "bandq/structure.hpp"
#include "helpers.hpp"

using namespace bandq;
using testing::error_code_of;

namespace {

void expect(const ClassVerdict& v, Answer answer, const std::string& rule) {
  CHECK(v.answer == answer);
  CHECK(v.certificate.rule == rule);
}

}  // namespace

TEST_CASE("triangular") {
  expect(classify_triangular({{1, 7}, {0, 2}}), Answer::Yes, "T3.1");
  expect(classify_triangular({{-1, 0}, {0, -1}}), Answer::No, "T3.1");
  expect(classify_triangular({{0, 1}, {0, 1}}), Answer::No, "T3.1");
  expect(classify_triangular({{2, 0, 0}, {5, 1, 0}, {-3, 4, 1}}), Answer::Yes, "T3.1");
  CHECK(error_code_of([] { classify_triangular({{1, 1}, {1, 1}}); }) == ErrorCode::WrongStructure);
}

TEST_CASE("triangular plus row") {
  RationalMatrix a{{1, 2, 5}, {0, 3, -1}, {1, 0, 2}};
  expect(classify_triangular_plus_row(a), Answer::Yes, "T3.2");
  a(0, 0) = 0;
  expect(classify_triangular_plus_row(a), Answer::No, "T3.2");
  RationalMatrix corner{{1, -1, 1}, {0, 1, -1}, {1, 0, 0}};
  CHECK(error_code_of([&] { classify_triangular_plus_row(corner); }) == ErrorCode::WrongStructure);
  CHECK(classify(corner).no());
}

TEST_CASE("Type I examples") {
  expect(classify_bdsw_type1({{1, -1}, {1, 0}}), Answer::Yes, "T5.2");
  expect(classify_bdsw_type1({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, -1}, {1, 0, 0, 0}}), Answer::No, "T5.2");
  auto b = classify_bdsw_type1({{0, 1}, {-1, 1}});
  expect(b, Answer::Yes, "T5.3");
  CHECK(b.certificate.scalars.at("k") == 1);
  expect(classify_bdsw_type1({{2, 1, 0}, {0, 3, -1}, {1, 0, -1}}), Answer::No, "T5.4");
  expect(classify_bdsw_type1({{2, -1, 0}, {0, 3, 1}, {1, 0, 1}}), Answer::Yes, "T5.1");
}

TEST_CASE("determinant-based bdsw examples") {
  expect(classify_bdsw_type2({{1, -1}, {-1, 1}}), Answer::No, "T6.1");
  expect(classify_bdsw_type2({{2, -1}, {-1, 2}}), Answer::Yes, "T6.1");
  expect(classify_bdsw_type2({{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}), Answer::No, "T6.1");
  expect(classify_bdsw_type3({{-1, 2}, {1, -1}}), Answer::Yes, "T7.1");
  expect(classify_bdsw_type3({{-1, 1}, {1, -1}}), Answer::No, "T7.1");
  expect(classify_bdsw_type3({{-2, 1}, {1, -1}}), Answer::No, "T7.1");
  auto iv = classify_bdsw_type4({{-1, 1, 0}, {0, -1, 1}, {-2, 0, 1}});
  expect(iv, Answer::Yes, "T8.1");
  CHECK(iv.certificate.scalars.at("k") == 2);
  CHECK(iv.certificate.scalars.at("det") == -1);
  expect(classify_bdsw_type4({{-1, 1, 0}, {0, -1, 1}, {-1, 0, 1}}), Answer::No, "T8.1");
  CHECK(error_code_of([] { classify_bdsw_type2({{-1, 1}, {1, -1}}); }) == ErrorCode::WrongStructure);
}

TEST_CASE("2x2 patterns") {
  auto v = classify_2x2({{1, -9}, {0, 1}});
  expect(v, Answer::Yes, "T9.1");
  CHECK(v.certificate.condition == "pattern i");
  expect(classify_2x2({{1, -1}, {-1, 1}}), Answer::No, "T9.1");
  v = classify_2x2({{-1, 2}, {1, -1}});
  expect(v, Answer::Yes, "T9.1");
  CHECK(v.certificate.condition == "pattern iii");
  CHECK(v.certificate.scalars.at("det") == -1);
  v = classify_2x2({{1, -2}, {1, -1}});
  expect(v, Answer::Yes, "T9.1");
  CHECK(v.certificate.condition == "pattern ii");
}

TEST_CASE("dispatch") {
  auto v = classify({{-1, 0}, {0, -1}});
  expect(v, Answer::No, "T2.2");
  expect(classify({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}), Answer::Yes, "T3.1");
  auto dense = classify_structural({{1, 2, -1}, {-2, 1, 3}, {3, -1, 1}});
  CHECK(dense.answer == Answer::Undecided);
  CHECK(dense.certificate.rule == "none");
  CHECK(classify({{1, 2, -1}, {-2, 1, 3}, {3, -1, 1}}).certificate.rule != "none");
}

TEST_CASE("2x2 and bdsw type classifiers agree") {
  for (int code = 0; code < 625; ++code) {
    RationalMatrix a(2);
    for (int c = 0, v = code; c < 4; ++c, v /= 5) a(c / 2, c % 2) = v % 5 - 2;
    auto two = classify_2x2(a);
    auto s = detect_structure(a);
    ClassVerdict typed;
    switch (s.tag) {
      case StructureTag::BdswTypeI: typed = classify_bdsw_type1(a); break;
      case StructureTag::BdswTypeII: typed = classify_bdsw_type2(a); break;
      case StructureTag::BdswTypeIII: typed = classify_bdsw_type3(a); break;
      case StructureTag::BdswTypeIV: typed = classify_bdsw_type4(a); break;
      case StructureTag::UpperTriangular:
      case StructureTag::LowerTriangular: typed = classify_triangular(a); break;
      default: continue;
    }
    INFO(a(0, 0), " ", a(0, 1), " ", a(1, 0), " ", a(1, 1));
    CHECK(typed.answer == two.answer);
  }
}

TEST_CASE("generated bdsw verdicts against R0 and degree") {
  std::mt19937_64 rng(8282);
  const InstanceType types[] = {InstanceType::BdswType1, InstanceType::BdswType2, InstanceType::BdswType3,
                                InstanceType::BdswType4};
  for (int t = 0; t < 240; ++t) {
    auto type = types[t % 4];
    std::size_t n = 2 + (t / 4) % 4;
    auto a = generate_one(type, n, 4, rng);
    auto v = classify(a);
    REQUIRE(v.decided());
    for (std::size_t k = 1; k < n; ++k) CHECK(classify(rotate_conjugate(a, k)).answer == v.answer);
    bool r0 = is_R0(a).yes();
    int d = r0 ? degree_unchecked(a) : 0;
    CHECK(v.yes() == (r0 && (d == 1 || d == -1)));
    if (type == InstanceType::BdswType1 && v.yes())
      for (std::size_t i = 0; i < n; ++i) CHECK(a(i, i) >= 0);
    if (type == InstanceType::BdswType3) {
      RationalMatrix neg(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) neg(i, j) = -a(i, j);
      CHECK(detect_structure(neg).tag == StructureTag::BdswTypeII);
    }
  }
}

TEST_CASE("Type I Case 2 Yes has positive determinant") {
  std::mt19937_64 rng(5252);
  int yes = 0;
  for (int t = 0; t < 200; ++t) {
    auto a = generate_bdsw_type1_case(2 + t % 5, 2, 4, rng);
    CHECK(bdsw_type1_case(a) == 2);
    if (classify_bdsw_type1(a).yes()) {
      ++yes;
      CHECK(determinant(a) > 0);
    }
  }
  CHECK(yes > 0);
}

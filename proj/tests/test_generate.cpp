#include <doctest.h>

#include "bandq/classifier.hpp"
#include "bandq/generate.hpp"
#include "bandq/structure.hpp"
#include "helpers.hpp"

using namespace bandq;
using testing::error_code_of;

TEST_CASE("type names round trip") {
  for (auto t : {InstanceType::Triangular, InstanceType::TriangularPlusRow, InstanceType::BdswType1,
                 InstanceType::BdswType2, InstanceType::BdswType3, InstanceType::BdswType4, InstanceType::TwoByTwo})
    CHECK(parse_instance_type(instance_type_name(t)) == t);
  CHECK(error_code_of([] { parse_instance_type("bdsw-5"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("generated instances have the requested structure") {
  for (std::size_t n = 2; n <= 6; ++n) {
    GenerateOptions o;
    o.n = n;
    o.count = 30;
    o.seed = 100 + n;

    o.type = InstanceType::BdswType3;
    for (const auto& a : generate(o)) {
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(a(i, i) < 0);
        CHECK(a(i, bdsw_offdiag_col(i, n)) > 0);
      }
      CHECK(detect_structure(a).tag == StructureTag::BdswTypeIII);
    }
    o.type = InstanceType::BdswType2;
    for (const auto& a : generate(o)) CHECK(detect_structure(a).tag == StructureTag::BdswTypeII);
    o.type = InstanceType::BdswType1;
    for (const auto& a : generate(o)) {
      CHECK(is_bdsw_shape(a));
      CHECK(!nonnegative_rows(a).empty());
      CHECK(bdsw_type1_case(a) != 0);
    }
    o.type = InstanceType::BdswType4;
    for (const auto& a : generate(o)) {
      auto s = detect_structure(a);
      CHECK(s.tag == StructureTag::BdswTypeIV);
      CHECK(s.k >= 1);
      CHECK(s.k < n);
      CHECK(nonnegative_rows(a).empty());
      CHECK(!nonpositive_row(a));
    }
    o.type = InstanceType::Triangular;
    for (const auto& a : generate(o)) CHECK((is_upper_triangular(a) || is_lower_triangular(a)));
    o.type = InstanceType::TriangularPlusRow;
    for (const auto& a : generate(o)) CHECK(is_triangular_plus_row(a));
  }
}

TEST_CASE("Type I cases") {
  std::mt19937_64 rng(9);
  for (int c = 1; c <= 4; ++c)
    for (int t = 0; t < 25; ++t) CHECK(bdsw_type1_case(generate_bdsw_type1_case(2 + t % 5, c, 5, rng)) == c);
}

TEST_CASE("determinism and entry range") {
  GenerateOptions o;
  o.type = InstanceType::TwoByTwo;
  o.count = 500;
  o.seed = 1;
  o.entry_range = 3;
  auto x = generate(o), y = generate(o);
  CHECK(x == y);
  for (const auto& a : x)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(abs(a(i, j)) <= 3);
  o.seed = 2;
  CHECK(generate(o) != x);
}

TEST_CASE("infeasible requests") {
  GenerateOptions o;
  o.type = InstanceType::BdswType4;
  o.n = 1;
  CHECK(error_code_of([&] { generate(o); }) == ErrorCode::InvalidArgument);
  o.type = InstanceType::TwoByTwo;
  o.n = 3;
  CHECK(error_code_of([&] { generate(o); }) == ErrorCode::InvalidArgument);
  o.type = InstanceType::BdswType2;
  o.n = 3;
  o.entry_range = 0;
  CHECK(error_code_of([&] { generate(o); }) == ErrorCode::InvalidArgument);
}

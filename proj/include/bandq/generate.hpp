#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "bandq/matrix.hpp"

namespace bandq {

enum class InstanceType {
  Triangular,          // upper or lower, chosen per instance
  TriangularPlusRow,
  BdswType1,
  BdswType2,
  BdswType3,
  BdswType4,
  TwoByTwo,
};

InstanceType parse_instance_type(std::string_view name);
const char* instance_type_name(InstanceType t) noexcept;

struct GenerateOptions {
  InstanceType type = InstanceType::TwoByTwo;
  std::size_t n = 2;
  std::size_t count = 1;
  std::uint64_t seed = 1;
  int entry_range = 5;  // integer entries in [-range, range]
};

/// Deterministic seeded instances satisfying the structural definition of
/// the requested type. Throws Error(InvalidArgument) for infeasible requests
/// (e.g. Type IV with n < 2).
std::vector<RationalMatrix> generate(const GenerateOptions& opts);

/// One instance of the given type, drawing from rng.
RationalMatrix generate_one(InstanceType type, std::size_t n, int entry_range,
                            std::mt19937_64& rng);

/// Type I bdsw instance in the requested last-row case (1..4).
RationalMatrix generate_bdsw_type1_case(std::size_t n, int which_case,
                                        int entry_range, std::mt19937_64& rng);

}  // namespace bandq

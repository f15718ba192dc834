#pragma once

#include <optional>
#include <random>

#include "bandq/error.hpp"

#include "bandq/matrix.hpp"

namespace testing {

inline bandq::RationalMatrix random_matrix(std::size_t n, int range, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-range, range);
  bandq::RationalMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
  return a;
}

inline bandq::RationalVector random_vector(std::size_t n, int range, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-range, range);
  bandq::RationalVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

inline bandq::RationalMatrix random_bdsw(std::size_t n, int range, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-range, range);
  bandq::RationalMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = d(rng);
    a(i, i + 1 < n ? i + 1 : 0) = d(rng);
  }
  return a;
}

template <class F>
std::optional<bandq::ErrorCode> error_code_of(F&& f) {
  try {
    f();
  } catch (const bandq::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testing

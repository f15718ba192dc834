#pragma once

#include <cstdint>

#include "bandq/exec.hpp"
#include "bandq/matrix.hpp"

namespace bandq {

struct DegreeOptions {
  std::uint64_t seed = 1;
  int max_draws = 64;
  Exec exec = Exec::Parallel;
};

/// LCP degree of an R0 matrix: sum of sgn det A_II over the solutions of
/// LCP(A, q) at a generic integer q in {-N..N}^n, N = 10^6 (1 + n).
/// Throws Error(NotR0), Error(ResampleBudgetExhausted), Error(CapExceeded).
int degree(const RationalMatrix& a, const DegreeOptions& opts = {});

/// Same computation without the R0 precheck (caller guarantees R0).
int degree_unchecked(const RationalMatrix& a, const DegreeOptions& opts = {});

}  // namespace bandq

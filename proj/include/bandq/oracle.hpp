#pragma once

#include <cstddef>
#include <cstdint>

#include "bandq/exec.hpp"
#include "bandq/matrix.hpp"
#include "bandq/verdict.hpp"

namespace bandq {

struct OracleOptions {
  std::size_t budget = 4096;  // random probes beyond corners and facet probes
  std::uint64_t seed = 1;
  Exec exec = Exec::Parallel;
};

/// Three-valued Q decision by brute force, independent of the structural
/// classifier.
///   No:  a nonpositive row, failure of S, or a probed q whose LCP has no
///        solution (exact enumeration).
///   Yes: R* membership, or R0 with nonzero degree.
/// Throws Error(CapExceeded).
ClassVerdict q_oracle(const RationalMatrix& a, const OracleOptions& opts = {});

}  // namespace bandq

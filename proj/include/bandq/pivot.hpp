#pragma once

#include <cstddef>
#include <vector>

#include "bandq/matrix.hpp"

namespace bandq {

/// Partition of A by a pivot set J: B = A[J^c, J^c], C = A[J^c, J],
/// D = A[J, J^c], E = A[J, J].
struct BlockSplit {
  std::vector<std::size_t> pivot;   // J, sorted
  std::vector<std::size_t> others;  // J^c, sorted
  std::vector<RationalVector> b, c, d, e;

  static BlockSplit of(const RationalMatrix& a, std::vector<std::size_t> pivot);
};

/// A/E = B - C E^{-1} D, indexed by J^c in increasing order.
/// Throws Error(SingularPivot), Error(InvalidArgument) for empty/full J.
RationalMatrix schur_complement(const RationalMatrix& a,
                                std::vector<std::size_t> pivot);

/// Principal pivot transform on J, with the same index labeling as A:
/// J^c block A/E, (J^c, J) block C E^{-1}, (J, J^c) block -E^{-1} D,
/// (J, J) block E^{-1}.
RationalMatrix ppt(const RationalMatrix& a, std::vector<std::size_t> pivot);

}  // namespace bandq

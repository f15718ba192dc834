#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bandq/matrix.hpp"

namespace bandq {

enum class StructureTag {
  UpperTriangular,
  LowerTriangular,
  TriangularPlusRow,
  Bidiagonal,
  BdswTypeI,
  BdswTypeII,
  BdswTypeIII,
  BdswTypeIV,
  TwoByTwo,
  General,
};

const char* structure_tag_name(StructureTag tag) noexcept;

struct StructureClass {
  StructureTag tag = StructureTag::General;
  // BdswTypeI: 1-based index (< n) of a nonnegative row of the normalized
  // matrix. BdswTypeIV: number of negative diagonal entries. 0 otherwise.
  std::size_t k = 0;
  // Type I normalization: rotate_conjugate amount applied to reach k < n
  // (0 when the original labeling already has a nonnegative row before n).
  std::size_t rotation = 0;
  std::vector<std::string> notes;

  bool has_note(const std::string& note) const;
};

// Shape predicates (exact).
bool is_upper_triangular(const RationalMatrix& a);
bool is_lower_triangular(const RationalMatrix& a);
bool is_upper_bidiagonal(const RationalMatrix& a);
/// Zero outside the diagonal, the superdiagonal and the (n, 1) corner.
bool is_bdsw_shape(const RationalMatrix& a);
/// Upper-triangular leading block of order n-1, last row (d^T, a_nn) with
/// d >= 0 and a_nn > 0.
bool is_triangular_plus_row(const RationalMatrix& a);

/// 0-based index of the first row with no positive entry, if any.
std::optional<std::size_t> nonpositive_row(const RationalMatrix& a);
/// 0-based indices of nonzero rows with every entry >= 0.
std::vector<std::size_t> nonnegative_rows(const RationalMatrix& a);

/// Column index of the "relevant" off-diagonal entry of row i in a bdsw
/// matrix: i+1, or 0 for the last row.
inline std::size_t bdsw_offdiag_col(std::size_t i, std::size_t n) {
  return i + 1 < n ? i + 1 : 0;
}

StructureClass detect_structure(const RationalMatrix& a);

/// Cyclic relabeling P A P^T with 1 <= k < n. The result is bdsw whenever
/// A is; b_{n1} = a_{k(k+1)}, b_{nn} = a_{kk} (1-based).
RationalMatrix rotate_conjugate(const RationalMatrix& a, std::size_t k);
Permutation rotation_permutation(std::size_t n, std::size_t k);

/// J A J with J the antidiagonal permutation.
RationalMatrix antidiagonal_conjugate(const RationalMatrix& a);

/// a11 a22 ... ann + (-1)^{n+1} a12 a23 ... a(n-1)n an1.
/// Throws Error(NotBdswShape).
Rational bdsw_determinant(const RationalMatrix& a);

}  // namespace bandq

#include "bandq/structure.hpp"

#include <algorithm>

#include "bandq/error.hpp"

namespace bandq {

const char* structure_tag_name(StructureTag tag) noexcept {
  switch (tag) {
    case StructureTag::UpperTriangular: return "UpperTriangular";
    case StructureTag::LowerTriangular: return "LowerTriangular";
    case StructureTag::TriangularPlusRow: return "TriangularPlusRow";
    case StructureTag::Bidiagonal: return "Bidiagonal";
    case StructureTag::BdswTypeI: return "BdswTypeI";
    case StructureTag::BdswTypeII: return "BdswTypeII";
    case StructureTag::BdswTypeIII: return "BdswTypeIII";
    case StructureTag::BdswTypeIV: return "BdswTypeIV";
    case StructureTag::TwoByTwo: return "TwoByTwo";
    case StructureTag::General: return "General";
  }
  return "General";
}

bool StructureClass::has_note(const std::string& note) const {
  return std::find(notes.begin(), notes.end(), note) != notes.end();
}

bool is_upper_triangular(const RationalMatrix& a) {
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a(i, j) != 0) return false;
  return true;
}

bool is_lower_triangular(const RationalMatrix& a) {
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = i + 1; j < a.order(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

bool is_upper_bidiagonal(const RationalMatrix& a) {
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      if (j != i && j != i + 1 && a(i, j) != 0) return false;
  return true;
}

bool is_bdsw_shape(const RationalMatrix& a) {
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool allowed = j == i || j == i + 1 || (i == n - 1 && j == 0);
      if (!allowed && a(i, j) != 0) return false;
    }
  return true;
}

bool is_triangular_plus_row(const RationalMatrix& a) {
  const std::size_t n = a.order();
  if (n < 2) return false;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a(i, j) != 0) return false;
  for (std::size_t j = 0; j + 1 < n; ++j)
    if (a(n - 1, j) < 0) return false;
  return a(n - 1, n - 1) > 0;
}

std::optional<std::size_t> nonpositive_row(const RationalMatrix& a) {
  for (std::size_t i = 0; i < a.order(); ++i) {
    bool has_positive = false;
    for (std::size_t j = 0; j < a.order() && !has_positive; ++j) has_positive = a(i, j) > 0;
    if (!has_positive) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> nonnegative_rows(const RationalMatrix& a) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < a.order(); ++i) {
    bool nonneg = true, nonzero = false;
    for (std::size_t j = 0; j < a.order(); ++j) {
      if (a(i, j) < 0) nonneg = false;
      if (a(i, j) != 0) nonzero = true;
    }
    if (nonneg && nonzero) rows.push_back(i);
  }
  return rows;
}

StructureClass detect_structure(const RationalMatrix& a) {
  const std::size_t n = a.order();
  StructureClass s;
  if (n == 2) s.notes.emplace_back("TwoByTwo");
  if (auto row = nonpositive_row(a)) {
    s.tag = StructureTag::General;
    s.notes.emplace_back("NonpositiveRow");
    s.k = *row + 1;
    return s;
  }
  if (n == 1) {
    s.tag = StructureTag::UpperTriangular;
    s.notes.emplace_back("OneByOne");
    return s;
  }
  if (is_upper_triangular(a)) {
    s.tag = is_upper_bidiagonal(a) ? StructureTag::Bidiagonal : StructureTag::UpperTriangular;
    return s;
  }
  if (is_lower_triangular(a)) {
    s.tag = StructureTag::LowerTriangular;
    return s;
  }
  if (is_bdsw_shape(a)) {
    auto nonneg = nonnegative_rows(a);
    if (!nonneg.empty()) {
      s.tag = StructureTag::BdswTypeI;
      if (nonneg.front() + 1 < n) {
        s.k = nonneg.front() + 1;
      } else {
        // Only the last row is nonnegative; rotating by n-1 moves it to row 1.
        s.rotation = n - 1;
        s.k = 1;
        s.notes.emplace_back("RotatedNonnegativeRow");
      }
      return s;
    }
    // Every row now has a diagonal entry and an off-diagonal entry of
    // opposite nonzero signs.
    std::size_t negative_diag = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (a(i, i) < 0) ++negative_diag;
    if (negative_diag == 0) {
      s.tag = StructureTag::BdswTypeII;
    } else if (negative_diag == n) {
      s.tag = StructureTag::BdswTypeIII;
    } else {
      s.tag = StructureTag::BdswTypeIV;
      s.k = negative_diag;
    }
    return s;
  }
  if (is_triangular_plus_row(a)) {
    s.tag = StructureTag::TriangularPlusRow;
    return s;
  }
  s.tag = StructureTag::General;
  return s;
}

Permutation rotation_permutation(std::size_t n, std::size_t k) {
  if (k < 1 || k >= n)
    throw Error(ErrorCode::IndexOutOfRange,
                "rotation index " + std::to_string(k) + " outside [1, " +
                    std::to_string(n) + ")");
  Permutation p;
  p.images.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.images[i] = (i + k) % n;
  return p;
}

RationalMatrix rotate_conjugate(const RationalMatrix& a, std::size_t k) {
  return rotation_permutation(a.order(), k).conjugate(a);
}

RationalMatrix antidiagonal_conjugate(const RationalMatrix& a) {
  Permutation j;
  j.images.resize(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) j.images[i] = a.order() - 1 - i;
  return j.conjugate(a);
}

Rational bdsw_determinant(const RationalMatrix& a) {
  if (!is_bdsw_shape(a))
    throw Error(ErrorCode::NotBdswShape, "matrix is not bidiagonal southwest");
  const std::size_t n = a.order();
  if (n == 1) return a(0, 0);
  Rational diag = 1, cycle = a(n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) diag *= a(i, i);
  for (std::size_t i = 0; i + 1 < n; ++i) cycle *= a(i, i + 1);
  // (-1)^{n+1}
  return (n % 2 == 1) ? Rational(diag + cycle) : Rational(diag - cycle);
}

}  // namespace bandq

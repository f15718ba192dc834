#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "bandq/rational.hpp"

namespace bandq {

/// Dense square matrix of exact rationals, row-major, order >= 1.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t order);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t order);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t order() const noexcept { return n_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }

  RationalVector row(std::size_t i) const;
  RationalVector diagonal() const;

  RationalMatrix transpose() const;
  RationalMatrix operator-() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix scaled(const Rational& c) const;
  RationalVector operator*(std::span<const Rational> x) const;

  bool operator==(const RationalMatrix& rhs) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

/// Bitmask over indices 0..n-1; bit i set means index i is in the set.
using IndexMask = std::uint32_t;

std::vector<std::size_t> mask_indices(IndexMask mask, std::size_t n);

/// Rectangular principal/off-principal block extraction A[rows, cols].
std::vector<RationalVector> submatrix(const RationalMatrix& a,
                                      std::span<const std::size_t> rows,
                                      std::span<const std::size_t> cols);

RationalMatrix principal_submatrix(const RationalMatrix& a,
                                   std::span<const std::size_t> idx);

/// Exact determinant by fraction-free (Bareiss) elimination.
Rational determinant(const RationalMatrix& a);

/// Exact inverse; std::nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

/// Result of an exact square solve M x = b.
struct LinearSolve {
  bool singular = false;
  bool consistent = false;
  RationalVector x;  // a particular solution when consistent (free vars = 0)
};

LinearSolve solve_linear(const RationalMatrix& m, std::span<const Rational> b);

/// Basis of { y : y^T M = 0 } (empty when M is nonsingular).
std::vector<RationalVector> left_null_basis(const RationalMatrix& m);

enum class Sign : std::int8_t { Neg = -1, Zero = 0, Pos = 1 };

struct SignPattern {
  std::size_t order = 0;
  std::vector<Sign> cells;

  Sign operator()(std::size_t i, std::size_t j) const { return cells[i * order + j]; }
  bool operator==(const SignPattern&) const = default;
};

SignPattern sign_pattern(const RationalMatrix& a);

/// Bijection on {0..n-1}. conjugate(A) = P A P^T with
/// (P A P^T)(i, j) = A(images[i], images[j]).
struct Permutation {
  std::vector<std::size_t> images;

  std::size_t order() const noexcept { return images.size(); }
  bool valid() const;
  RationalMatrix conjugate(const RationalMatrix& a) const;
  RationalVector apply(std::span<const Rational> v) const;
};

}  // namespace bandq

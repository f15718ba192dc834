#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bandq/rational.hpp"

namespace bandq {

/// Linear constraint row: coeffs . x (== or >=) rhs.
struct LinearRow {
  RationalVector coeffs;
  Rational rhs;
};

/// Exact feasibility problem over variables x with x >= lower_bounds.
struct FeasibilitySystem {
  std::size_t num_vars = 0;
  std::vector<LinearRow> equalities;
  std::vector<LinearRow> inequalities;  // coeffs . x >= rhs
  RationalVector lower_bounds;          // empty means all zero

  explicit FeasibilitySystem(std::size_t n = 0) : num_vars(n) {}

  void add_equality(RationalVector coeffs, Rational rhs);
  void add_inequality(RationalVector coeffs, Rational rhs);
};

/// Exact two-phase simplex (phase 1 only) with Bland's rule. Returns a
/// feasible point or std::nullopt when the system is infeasible.
/// Throws Error(DimensionMismatch) on inconsistent row lengths.
std::optional<RationalVector> solve_feasibility(const FeasibilitySystem& sys);

/// True when x satisfies every constraint of sys exactly.
bool satisfies(const FeasibilitySystem& sys, const RationalVector& x);

}  // namespace bandq

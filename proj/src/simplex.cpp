#include "bandq/simplex.hpp"

#include "bandq/error.hpp"

namespace bandq {

void FeasibilitySystem::add_equality(RationalVector coeffs, Rational rhs) {
  equalities.push_back({std::move(coeffs), std::move(rhs)});
}

void FeasibilitySystem::add_inequality(RationalVector coeffs, Rational rhs) {
  inequalities.push_back({std::move(coeffs), std::move(rhs)});
}

namespace {

void check_dimensions(const FeasibilitySystem& sys) {
  for (const auto* rows : {&sys.equalities, &sys.inequalities})
    for (const auto& row : *rows)
      if (row.coeffs.size() != sys.num_vars)
        throw Error(ErrorCode::DimensionMismatch, "constraint row length differs from variable count");
  if (!sys.lower_bounds.empty() && sys.lower_bounds.size() != sys.num_vars)
    throw Error(ErrorCode::DimensionMismatch, "lower bound vector length differs from variable count");
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

}  // namespace

std::optional<RationalVector> solve_feasibility(const FeasibilitySystem& sys) {
  check_dimensions(sys);
  const std::size_t nv = sys.num_vars;
  const std::size_t n_eq = sys.equalities.size();
  const std::size_t n_in = sys.inequalities.size();
  const std::size_t m = n_eq + n_in;
  RationalVector lb = sys.lower_bounds.empty() ? RationalVector(nv) : sys.lower_bounds;

  if (m == 0) return lb;

  // Columns: y (nv) | surplus (n_in) | artificial (m) | rhs.
  const std::size_t n_struct = nv + n_in;
  const std::size_t n_cols = n_struct + m;
  const std::size_t rhs = n_cols;
  std::vector<RationalVector> t(m + 1, RationalVector(n_cols + 1));
  std::vector<std::size_t> basis(m);

  for (std::size_t r = 0; r < m; ++r) {
    const LinearRow& row = r < n_eq ? sys.equalities[r] : sys.inequalities[r - n_eq];
    for (std::size_t j = 0; j < nv; ++j) t[r][j] = row.coeffs[j];
    if (r >= n_eq) t[r][nv + (r - n_eq)] = -1;
    t[r][rhs] = row.rhs - dot(row.coeffs, lb);
    if (t[r][rhs] < 0)
      for (std::size_t j = 0; j <= rhs; ++j) t[r][j] = -t[r][j];
    t[r][n_struct + r] = 1;
    basis[r] = n_struct + r;
  }
  // Objective row holds reduced costs of "minimize sum of artificials".
  RationalVector& obj = t[m];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j < n_struct; ++j) obj[j] -= t[r][j];
  for (std::size_t r = 0; r < m; ++r) obj[rhs] -= t[r][rhs];

  for (;;) {
    // Bland: lowest-index column with negative reduced cost enters.
    std::size_t enter = n_cols;
    for (std::size_t j = 0; j < n_cols; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == n_cols) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][rhs] / t[r][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    // Phase 1 is bounded below by zero, so some row always limits the step.
    if (leave == m) break;

    Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      Rational f = t[r][enter];
      for (std::size_t j = 0; j <= rhs; ++j)
        if (t[leave][j] != 0) t[r][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (obj[rhs] != 0) return std::nullopt;  // -(sum of artificials) < 0

  RationalVector x = lb;
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < nv) x[basis[r]] += t[r][rhs];
  return x;
}

bool satisfies(const FeasibilitySystem& sys, const RationalVector& x) {
  if (x.size() != sys.num_vars) return false;
  for (std::size_t j = 0; j < sys.num_vars; ++j) {
    Rational lo = sys.lower_bounds.empty() ? Rational(0) : sys.lower_bounds[j];
    if (x[j] < lo) return false;
  }
  for (const auto& row : sys.equalities)
    if (dot(row.coeffs, x) != row.rhs) return false;
  for (const auto& row : sys.inequalities)
    if (dot(row.coeffs, x) < row.rhs) return false;
  return true;
}

}  // namespace bandq

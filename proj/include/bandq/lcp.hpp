#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bandq/exec.hpp"
#include "bandq/matrix.hpp"

namespace bandq {

struct LcpInstance {
  RationalMatrix a;
  RationalVector q;
};

struct LcpSolution {
  RationalVector x;
  IndexMask support = 0;        // { i : x_i > 0 }
  bool nondegenerate = false;   // x + Ax + q > 0 componentwise
  int support_det_sign = 1;     // sgn det A_II, +1 for the empty support
  bool singular_family = false; // representative of an affine solution family
};

struct LcpSolveResult {
  std::vector<LcpSolution> solutions;  // ordered by enumerating support mask
  bool has_singular_family = false;
};

/// Support-enumeration cap: LCP_ENUM_CAP if set, else 16.
std::size_t enumeration_cap();
/// Throws Error(CapExceeded) when n exceeds enumeration_cap().
void check_enumeration_cap(std::size_t n);

/// All solutions of LCP(A, q) by enumerating complementary supports. Complete
/// for nonsingular supports; one flagged representative per consistent
/// singular support.
LcpSolveResult solve_lcp(const LcpInstance& inst, Exec exec = Exec::Parallel);

/// Exact check of x >= 0, Ax + q >= 0, x . (Ax + q) = 0.
bool is_lcp_solution(const RationalMatrix& a, const RationalVector& q,
                     const RationalVector& x);

/// Per-support factorizations of a fixed matrix, reused across many q.
class SupportTable {
 public:
  explicit SupportTable(const RationalMatrix& a, Exec exec = Exec::Parallel);

  const RationalMatrix& matrix() const noexcept { return a_; }
  std::size_t order() const noexcept { return a_.order(); }
  int det_sign(IndexMask mask) const { return entries_[mask].det_sign; }

  LcpSolveResult solve(const RationalVector& q) const;
  /// Any solution, stopping at the first support that yields one.
  std::optional<RationalVector> find_solution(const RationalVector& q) const;

  /// Sum of sgn det A_II over all solutions when every solution is
  /// nondegenerate and no singular support is consistent; nullopt otherwise.
  std::optional<int> signed_solution_count(const RationalVector& q) const;

 private:
  struct Entry {
    std::vector<std::size_t> rows;  // I
    std::vector<std::size_t> rest;  // complement of I
    int det_sign = 1;
    std::optional<RationalMatrix> inverse;      // A_II^{-1} when nonsingular
    std::vector<RationalVector> left_null;      // when singular
  };

  RationalMatrix a_;
  std::vector<Entry> entries_;
};

}  // namespace bandq

#pragma once

#include "bandq/matrix.hpp"
#include "bandq/oracle.hpp"
#include "bandq/structure.hpp"
#include "bandq/verdict.hpp"

namespace bandq {

// Q-property decisions from the structural characterizations. Every decided
// verdict carries the rule id ("T3.1", "T5.2", ...) and the condition that
// fired. The type-specific entry points throw Error(WrongStructure) when the
// input falls outside their hypotheses.

/// Triangular: Q iff the diagonal is positive (then also P, E and R*).
ClassVerdict classify_triangular(const RationalMatrix& a);

/// Upper-triangular block plus a nonnegative last row with a_nn > 0:
/// Q iff the diagonal is positive.
ClassVerdict classify_triangular_plus_row(const RationalMatrix& a);

/// Type I bdsw, by the signs of (a_n1, a_nn).
ClassVerdict classify_bdsw_type1(const RationalMatrix& a);
/// Type II bdsw: Q iff det A > 0.
ClassVerdict classify_bdsw_type2(const RationalMatrix& a);
/// Type III bdsw: Q iff (-1)^{n+1} det A > 0.
ClassVerdict classify_bdsw_type3(const RationalMatrix& a);
/// Type IV bdsw with k negative diagonal entries: Q iff (-1)^{k+1} det A > 0.
ClassVerdict classify_bdsw_type4(const RationalMatrix& a);

/// Complete 2x2 characterization by sign pattern and determinant.
ClassVerdict classify_2x2(const RationalMatrix& a);

/// Type I case split on the last row: 1 (a_n1 >= 0, a_nn > 0),
/// 2 (a_n1 > 0, a_nn = 0), 3 (a_n1 < 0, a_nn > 0), 4 (a_n1 > 0, a_nn < 0);
/// 0 when none applies.
int bdsw_type1_case(const RationalMatrix& a);

/// Theorem dispatch only: Undecided (rule "none") when no characterization
/// applies.
ClassVerdict classify_structural(const RationalMatrix& a);

/// Full dispatch: nonpositive row, 1x1, 2x2, triangular, bdsw types,
/// triangular-plus-row, then the brute-force oracle.
ClassVerdict classify(const RationalMatrix& a, const OracleOptions& fallback = {});

}  // namespace bandq

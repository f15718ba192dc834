#pragma once

#include "bandq/exec.hpp"
#include "bandq/matrix.hpp"
#include "bandq/verdict.hpp"

namespace bandq {

// Exact membership tests. Each No verdict carries a witness vector "x".

/// LCP(A, 0) has only the zero solution.
ClassVerdict is_R0(const RationalMatrix& a, Exec exec = Exec::Parallel);
/// R0 and LCP(A, d) has only the zero solution. Throws Error(NotPositive).
ClassVerdict is_Rd(const RationalMatrix& a, const RationalVector& d,
                   Exec exec = Exec::Parallel);
ClassVerdict is_E0(const RationalMatrix& a, Exec exec = Exec::Parallel);
ClassVerdict is_E(const RationalMatrix& a, Exec exec = Exec::Parallel);
/// Some x > 0 with Ax > 0; the Yes witness is strictly positive.
ClassVerdict is_S(const RationalMatrix& a);
ClassVerdict is_P(const RationalMatrix& a, Exec exec = Exec::Parallel);
ClassVerdict is_P0(const RationalMatrix& a, Exec exec = Exec::Parallel);
ClassVerdict is_Z(const RationalMatrix& a);
ClassVerdict is_Rstar(const RationalMatrix& a, Exec exec = Exec::Parallel);

}  // namespace bandq

#pragma once

namespace bandq {

/// Kernels over complementary supports / principal minors come in a serial
/// reference form and an OpenMP form. Both produce identical results.
enum class Exec { Serial, Parallel };

}  // namespace bandq

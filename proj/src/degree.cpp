#include "bandq/degree.hpp"

#include <random>

#include "bandq/classes.hpp"
#include "bandq/error.hpp"
#include "bandq/lcp.hpp"

namespace bandq {

int degree_unchecked(const RationalMatrix& a, const DegreeOptions& opts) {
  const std::size_t n = a.order();
  check_enumeration_cap(n);
  SupportTable table(a, opts.exec);
  const long bound = 1'000'000L * static_cast<long>(1 + n);
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  RationalVector q(n);
  for (int draw = 0; draw < opts.max_draws; ++draw) {
    for (auto& qi : q) qi = dist(rng);
    if (auto count = table.signed_solution_count(q)) return *count;
  }
  throw Error(ErrorCode::ResampleBudgetExhausted,
              "no generic q found in " + std::to_string(opts.max_draws) + " draws");
}

int degree(const RationalMatrix& a, const DegreeOptions& opts) {
  if (!is_R0(a, opts.exec).yes()) throw Error(ErrorCode::NotR0, "matrix is not R0");
  return degree_unchecked(a, opts);
}

}  // namespace bandq

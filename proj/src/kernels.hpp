#pragma once

#include <atomic>
#include <optional>
#include <utility>
#include <vector>

#include "bandq/exec.hpp"

namespace bandq::detail {

/// Smallest index in [begin, end) for which f returns a value, with that
/// value. The OpenMP path evaluates indices concurrently but skips indices
/// beyond the best hit so far; the answer equals the serial scan's.
template <class T, class F>
std::optional<std::pair<long, T>> first_hit(long begin, long end, Exec exec, F&& f) {
  if (exec == Exec::Serial) {
    for (long i = begin; i < end; ++i)
      if (auto r = f(i)) return std::pair<long, T>{i, std::move(*r)};
    return std::nullopt;
  }
  std::vector<std::optional<T>> hits(static_cast<std::size_t>(end - begin));
  std::atomic<long> best{end};
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = begin; i < end; ++i) {
    if (i > best.load(std::memory_order_relaxed)) continue;
    if (auto r = f(i)) {
      hits[static_cast<std::size_t>(i - begin)] = std::move(r);
      long cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  long b = best.load();
  if (b == end) return std::nullopt;
  return std::pair<long, T>{b, std::move(*hits[static_cast<std::size_t>(b - begin)])};
}

}  // namespace bandq::detail

// Serial vs OpenMP kernels. Inputs are fixed-seed random integer matrices.

#include <benchmark/benchmark.h>

#include <random>

#include "bandq/classes.hpp"
#include "bandq/degree.hpp"
#include "bandq/lcp.hpp"
#include "bandq/oracle.hpp"

using namespace bandq;

namespace {

RationalMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-5, 5);
  RationalMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
  return a;
}

Exec exec_of(const benchmark::State& s) { return s.range(1) ? Exec::Parallel : Exec::Serial; }

void set_label(benchmark::State& s) { s.SetLabel(s.range(1) ? "parallel" : "serial"); }

void BM_solve_lcp(benchmark::State& s) {
  const auto n = static_cast<std::size_t>(s.range(0));
  LcpInstance inst{random_matrix(n, 1), RationalVector(n, Rational(-1))};
  for (auto _ : s) benchmark::DoNotOptimize(solve_lcp(inst, exec_of(s)));
  set_label(s);
}

void BM_is_R0(benchmark::State& s) {
  auto a = random_matrix(static_cast<std::size_t>(s.range(0)), 2);
  for (auto _ : s) benchmark::DoNotOptimize(is_R0(a, exec_of(s)));
  set_label(s);
}

void BM_support_table(benchmark::State& s) {
  auto a = random_matrix(static_cast<std::size_t>(s.range(0)), 3);
  for (auto _ : s) benchmark::DoNotOptimize(SupportTable(a, exec_of(s)));
  set_label(s);
}

void BM_q_oracle(benchmark::State& s) {
  auto a = random_matrix(static_cast<std::size_t>(s.range(0)), 4);
  OracleOptions opts{256, 1, exec_of(s)};
  for (auto _ : s) benchmark::DoNotOptimize(q_oracle(a, opts));
  set_label(s);
}

void sizes(benchmark::internal::Benchmark* b) {
  for (long n : {4, 6, 8, 10})
    for (long par : {0, 1}) b->Args({n, par});
  b->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_solve_lcp)->Apply(sizes);
BENCHMARK(BM_is_R0)->Apply(sizes);
BENCHMARK(BM_support_table)->Apply(sizes);
BENCHMARK(BM_q_oracle)->Apply([](benchmark::internal::Benchmark* b) {
  for (long n : {3, 4, 5, 6})
    for (long par : {0, 1}) b->Args({n, par});
  b->Unit(benchmark::kMillisecond)->UseRealTime();
});

BENCHMARK_MAIN();

// Direct summation against the closed forms, swept over n.

#include <benchmark/benchmark.h>

#include "trigseries/closed_form.hpp"
#include "trigseries/exact_core.hpp"
#include "trigseries/series_oracle.hpp"

namespace ts = trigseries;

namespace {

constexpr double kX = 1.0;

void BM_TanPairSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ts::tan_pair_sum(n, ts::Angle{kX}));
  state.SetComplexityN(n);
}

void BM_TanPairClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ts::tan_pair_rhs(n, ts::Angle{kX}));
}

void BM_TanHalfSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ts::tan_half_sum(n, ts::Angle{kX}));
  state.SetComplexityN(n);
}

void BM_TanHalfClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ts::tan_half_rhs(n, ts::Angle{kX}));
}

void BM_TanTripleSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ts::tan_triple_sum(n, ts::Angle{kX}));
  state.SetComplexityN(n);
}

void BM_TanTripleClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ts::tan_triple_rhs(n, ts::Angle{kX}));
}

// Exact side: binomial expansion versus repeated squaring of 3 - 2i.
void BM_BinomSeriesPair(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ts::binom_series_pair(3, -2, n));
}

void BM_GaussPow(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ts::gauss_pow({3, -2}, n));
}

}  // namespace

BENCHMARK(BM_TanPairSum)->RangeMultiplier(10)->Range(10, 1'000'000)->Complexity(benchmark::oN);
BENCHMARK(BM_TanPairClosed)->RangeMultiplier(10)->Range(10, 1'000'000);
BENCHMARK(BM_TanHalfSum)->DenseRange(8, 48, 8)->Complexity(benchmark::oN);
BENCHMARK(BM_TanHalfClosed)->DenseRange(8, 48, 8);
BENCHMARK(BM_TanTripleSum)->RangeMultiplier(10)->Range(10, 1'000'000)->Complexity(benchmark::oN);
BENCHMARK(BM_TanTripleClosed)->RangeMultiplier(10)->Range(10, 1'000'000);
BENCHMARK(BM_BinomSeriesPair)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK(BM_GaussPow)->RangeMultiplier(4)->Range(16, 1024);

BENCHMARK_MAIN();

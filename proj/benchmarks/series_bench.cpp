#include <benchmark/benchmark.h>

#include "treedegree/series.hpp"

using namespace treedegree;

static void BM_CatalanSeries(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(catalan_series(order));
  }
}
BENCHMARK(BM_CatalanSeries)->RangeMultiplier(2)->Range(8, 64);

static void BM_KarySeries(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kary_series(4, order));
  }
}
BENCHMARK(BM_KarySeries)->RangeMultiplier(2)->Range(8, 32);

static void BM_KaryDerivativeSeries(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kary_derivative_series(3, 1, order));
  }
}
BENCHMARK(BM_KaryDerivativeSeries)->RangeMultiplier(2)->Range(8, 32);

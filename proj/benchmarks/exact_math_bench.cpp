#include <benchmark/benchmark.h>

#include "treedegree/exact_math.hpp"

using namespace treedegree;

static void BM_Binomial(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(binomial(n, n / 2));
  }
}
BENCHMARK(BM_Binomial)->RangeMultiplier(4)->Range(16, 4096);

static void BM_KaryOutdegreeCount(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_kary_outdegree(n, 5, 2));
  }
}
BENCHMARK(BM_KaryOutdegreeCount)->RangeMultiplier(4)->Range(16, 1024);

static void BM_OutdegreeSequenceIdentity(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_outdegree_sequence_identity(n, 1));
  }
}
BENCHMARK(BM_OutdegreeSequenceIdentity)->DenseRange(6, 14, 4);

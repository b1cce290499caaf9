#include <benchmark/benchmark.h>

#include "urnlab/chain_model.hpp"
#include "urnlab/exact_engine.hpp"
#include "urnlab/rng.hpp"
#include "urnlab/stochastic_sim.hpp"

using namespace urnlab;

static void BM_Evolve(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const ChainParams p(n, n / 2);
  const Pmf start = Pmf::point_mass(n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(evolve(p, start, 0.25 * n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Evolve)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

static void BM_SamplePath(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const ChainParams p(n, n / 2);
  RngStream rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_path(p, n / 2, static_cast<double>(n), rng));
}
BENCHMARK(BM_SamplePath)->RangeMultiplier(10)->Range(100, 100000)->Unit(benchmark::kMicrosecond);

static void BM_SampleStateAt(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const ChainParams p(n, n / 2);
  RngStream rng(2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_state_at(p, n / 2, static_cast<double>(n), rng));
}
BENCHMARK(BM_SampleStateAt)->RangeMultiplier(10)->Range(100, 100000)->Unit(benchmark::kMicrosecond);

static void BM_ExpSum(benchmark::State& state) {
  RngStream rng(3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(exp_sum_sample(state.range(0), 0, rng));
}
BENCHMARK(BM_ExpSum)->RangeMultiplier(10)->Range(100, 100000);

BENCHMARK_MAIN();

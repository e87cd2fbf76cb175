#include <benchmark/benchmark.h>

#include "rsub/constructions.hpp"
#include "rsub/generators.hpp"
#include "rsub/rainbow.hpp"

namespace {

void BM_SampledRainbowCycle(benchmark::State& state) {
  auto g = rsub::latin_colored_bipartite(static_cast<std::size_t>(state.range(0)));
  rsub::SampleConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(rsub::find_rainbow_cycle(g, cfg));
}
BENCHMARK(BM_SampledRainbowCycle)->RangeMultiplier(2)->Range(8, 64);

void BM_ExactRainbowCycleHypercube(benchmark::State& state) {
  auto g = rsub::hypercube_colored(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(rsub::find_rainbow_cycle_exact(g, g.num_vertices(), 50'000'000));
}
BENCHMARK(BM_ExactRainbowCycleHypercube)->DenseRange(2, 5);

void BM_OneSubdivision(benchmark::State& state) {
  rsub::Rng rng(3);
  auto g = rsub::random_gnp(static_cast<std::size_t>(state.range(0)), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rsub::find_one_subdivision(g, 3));
}
BENCHMARK(BM_OneSubdivision)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

#include <benchmark/benchmark.h>

#include "rsub/generators.hpp"
#include "rsub/hypergraph.hpp"
#include "rsub/topo.hpp"

namespace {

void BM_MinDegreeCleaning(benchmark::State& state) {
  rsub::Rng rng(1);
  auto g = rsub::random_rgraph(static_cast<std::size_t>(state.range(0)), 3, 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rsub::mindeg_subhypergraph(g));
}
BENCHMARK(BM_MinDegreeCleaning)->RangeMultiplier(2)->Range(16, 64);

void BM_ExactFaceCycle(benchmark::State& state) {
  auto g = rsub::complete_rgraph(8, 3);
  rsub::FaceCycleOptions opt;
  for (auto _ : state) benchmark::DoNotOptimize(rsub::find_face_cycle(g, static_cast<std::size_t>(state.range(0)), opt));
}
BENCHMARK(BM_ExactFaceCycle)->DenseRange(5, 8);

void BM_ClassifySurface(benchmark::State& state) {
  auto walk = rsub::tight_cycle(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(rsub::classify_surface(walk));
}
BENCHMARK(BM_ClassifySurface)->RangeMultiplier(4)->Range(8, 512);

}  // namespace

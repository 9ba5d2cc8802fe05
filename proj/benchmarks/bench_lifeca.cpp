#include <benchmark/benchmark.h>

#include <random>

#include "noosphere/lifeca.hpp"
#include "noosphere/pattern_io.hpp"

namespace {

using namespace noosphere;

void BM_TorusStep(benchmark::State& state) {
  const auto n = state.range(0);
  Grid g = Grid::toroidal(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  std::mt19937_64 rng(1);
  for (std::int64_t r = 0; r < n; ++r) {
    for (std::int64_t c = 0; c < n; ++c) g.set(r, c, (rng() & 3u) == 0);
  }
  for (auto _ : state) g = step(g);
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_TorusStep)->Arg(64)->Arg(512);

// Spacefiller growth: population is quadratic, so this tracks the unbounded
// engine on a large, dense interior.
void BM_SpacefillerRun(benchmark::State& state) {
  const Grid max = read_pattern_file(NOOSPHERE_DATA_DIR "/patterns/max.txt", Boundary::kUnbounded);
  for (auto _ : state) benchmark::DoNotOptimize(run(max, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SpacefillerRun)->Arg(256)->Unit(benchmark::kMillisecond);

// Exhaustive predecessor search, 2^(w*h) candidates in the worst case.
void BM_GardenOfEden(benchmark::State& state) {
  const auto w = static_cast<std::size_t>(state.range(0));
  Grid g = Grid::toroidal(w, 4);
  g.set(0, 0);
  g.set(1, 1);
  g.set(2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(is_garden_of_eden(g));
}
BENCHMARK(BM_GardenOfEden)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

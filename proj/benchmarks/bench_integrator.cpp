#include <benchmark/benchmark.h>

#include "noosphere/integrator.hpp"
#include "noosphere/noosim.hpp"

namespace {

using namespace noosphere;

// Predator-prey over [0, 100] sampled at 0.01, internal step 0.01 / substeps.
void BM_LotkaVolterraRk4(benchmark::State& state) {
  const auto rhs = lv_rhs(LotkaVolterraParams{1, 10, 1, 0});
  const StateVector y0{{"y1", "y2"}, {0.02, 1.0}};
  const auto substeps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_rk4(rhs, y0, TimeGrid{0, 100, 0.01}, substeps));
  }
  state.SetItemsProcessed(state.iterations() * 10000 * state.range(0));
}
BENCHMARK(BM_LotkaVolterraRk4)->Arg(1)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_ParadigmOrbit(benchmark::State& state) {
  const auto map = paradigm_map(EnergyParadigmParams{2, 0.5, 100});
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate_map(map, StateVector{{"y1"}, {10.0}}, 1000));
  }
}
BENCHMARK(BM_ParadigmOrbit);

}  // namespace

BENCHMARK_MAIN();

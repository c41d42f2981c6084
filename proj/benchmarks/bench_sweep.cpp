#include <numbers>

#include <benchmark/benchmark.h>

#include "dicke3/sweep.hpp"

namespace {

dicke3::SweepSpec diagram(int side, unsigned workers) {
  dicke3::SweepSpec spec;
  spec.gauge = dicke3::Gauge::Unified;
  spec.phi = std::numbers::pi / 4;
  spec.coupling_axis = dicke3::Axis::linear(0.0, 1.5, side);
  spec.detuning_axis = dicke3::Axis::linear(0.2, 2.0, side);
  spec.workers = workers;
  return spec;
}

void BM_PhaseDiagram(benchmark::State& state) {
  const auto spec = diagram(static_cast<int>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(dicke3::phase_diagram(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_PhaseDiagram)->Args({101, 1})->Args({201, 1})->Args({201, 0})->Unit(benchmark::kMillisecond);

void BM_EpScan(benchmark::State& state) {
  dicke3::SweepSpec spec;
  spec.gauge = dicke3::Gauge::NonHermitianUnified;
  spec.phi = std::numbers::pi / 3;
  spec.coupling_axis = dicke3::Axis::linear(0.0, 1.0, static_cast<int>(state.range(0)));
  spec.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(dicke3::ep_scan(spec));
}
BENCHMARK(BM_EpScan)->Arg(1001)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

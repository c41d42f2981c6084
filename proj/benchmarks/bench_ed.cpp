#include <benchmark/benchmark.h>

#include "dicke3/ed_oracle.hpp"

namespace {

dicke3::ModelParams resonant(int atoms) {
  dicke3::RawParams raw;
  raw.eta = 1.0;
  raw.G = 1.0;
  raw.N = atoms;
  return dicke3::validate_params(raw);
}

void BM_BuildHamiltonian(benchmark::State& state) {
  const auto p = resonant(static_cast<int>(state.range(0)));
  const int n_max = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(dicke3::build_hamiltonian(dicke3::Gauge::Coulomb, p, n_max));
}
BENCHMARK(BM_BuildHamiltonian)->Args({4, 100})->Args({8, 200})->Unit(benchmark::kMicrosecond);

// Dense versus Lanczos on the same matrix.
void BM_GroundState(benchmark::State& state) {
  const auto p = resonant(4);
  const auto h = dicke3::build_hamiltonian(dicke3::Gauge::Coulomb, p, static_cast<int>(state.range(0)));
  dicke3::EdLimits limits;
  limits.dense_threshold = state.range(1) ? 1 : 1'000'000;
  for (auto _ : state) benchmark::DoNotOptimize(dicke3::ground_state(h, limits).energy);
  state.SetLabel(state.range(1) ? "lanczos" : "dense");
}
BENCHMARK(BM_GroundState)->Args({60, 0})->Args({60, 1})->Args({150, 0})->Args({150, 1})->Unit(benchmark::kMillisecond);

void BM_CutoffConverge(benchmark::State& state) {
  const auto p = resonant(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dicke3::cutoff_converge(dicke3::Gauge::Coulomb, p, 1e-8));
}
BENCHMARK(BM_CutoffConverge)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

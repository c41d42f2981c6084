#include <numbers>

#include <benchmark/benchmark.h>

#include "dicke3/variational.hpp"

namespace {

dicke3::ModelParams params(double G) {
  dicke3::RawParams raw;
  raw.eta = 1.3;
  raw.G = G;
  raw.N = 16;
  raw.phi = std::numbers::pi / 3;
  return dicke3::validate_params(raw);
}

void BM_Energy(benchmark::State& state) {
  const auto gauge = static_cast<dicke3::Gauge>(state.range(0));
  const auto p = params(0.4);
  double gamma = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dicke3::energy(gauge, p, gamma, dicke3::Branch::Minus));
    gamma += 1e-3;
  }
}
BENCHMARK(BM_Energy)->DenseRange(0, 3);

void BM_SolveGroundState(benchmark::State& state) {
  const auto gauge = static_cast<dicke3::Gauge>(state.range(0));
  const auto p = params(1.2);
  for (auto _ : state) benchmark::DoNotOptimize(dicke3::solve_ground_state(gauge, p));
}
BENCHMARK(BM_SolveGroundState)->DenseRange(0, 3);

void BM_OffDiagonal(benchmark::State& state) {
  const auto gauge = static_cast<dicke3::Gauge>(state.range(0));
  const auto p = params(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(dicke3::offdiag_residuals(gauge, p, 1.0));
}
BENCHMARK(BM_OffDiagonal)->DenseRange(0, 3);

}  // namespace

BENCHMARK_MAIN();

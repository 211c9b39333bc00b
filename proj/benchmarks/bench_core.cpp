#include <benchmark/benchmark.h>

#include "spheroid/mode_oracle.hpp"
#include "spheroid/spectrum.hpp"
#include "spheroid/special_functions.hpp"
#include "spheroid/stationary.hpp"

namespace {

using namespace spheroid;

void BM_BesselRatio(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  double r = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_ratio(k, r));
    r = r < 50.0 ? r * 1.01 : 0.5;
  }
}
BENCHMARK(BM_BesselRatio)->Arg(0)->Arg(20)->Arg(200);

void BM_ThetaStar(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(theta_star(0.1));
}
BENCHMARK(BM_ThetaStar);

void BM_SolveStationary(benchmark::State& state) {
  const ModelParams p;
  for (auto _ : state) benchmark::DoNotOptimize(solve_stationary(p));
}
BENCHMARK(BM_SolveStationary);

void BM_GammaThresholds(benchmark::State& state) {
  const auto k_max = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_thresholds(8.75, k_max));
}
BENCHMARK(BM_GammaThresholds)->Arg(64)->Arg(1000);

void BM_SolveModeBvp(benchmark::State& state) {
  const auto s = solve_stationary(ModelParams{}).at(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_mode_bvp(s, 5, n));
}
BENCHMARK(BM_SolveModeBvp)->Arg(1024)->Arg(4096);

}  // namespace
BENCHMARK_MAIN();

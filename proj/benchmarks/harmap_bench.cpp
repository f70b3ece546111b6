#include <benchmark/benchmark.h>

#include "harmap/criteria.hpp"
#include "harmap/geometry.hpp"
#include "harmap/operators.hpp"
#include "harmap/order.hpp"

using namespace harmap;

static void BM_AOperator(benchmark::State& state) {
  const HarmonicMap K = harmonic_koebe_K();
  const Complex z(0.3, -0.6);
  for (auto _ : state) benchmark::DoNotOptimize(a_operator(K, z));
}
BENCHMARK(BM_AOperator);

static void BM_Schwarzian(benchmark::State& state) {
  const HarmonicMap f = log_example();
  const Complex z(0.3, -0.6);
  for (auto _ : state) benchmark::DoNotOptimize(schwarzian(f, z));
}
BENCHMARK(BM_Schwarzian);

static void BM_LowerOrder(benchmark::State& state) {
  const HarmonicMap K = harmonic_koebe_K();
  GridSpec g;
  g.N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lower_order(K, g).value);
}
BENCHMARK(BM_LowerOrder)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_Trajectory(benchmark::State& state) {
  const HarmonicMap L = half_plane_L();
  for (auto _ : state)
    benchmark::DoNotOptimize(integrate_trajectory(L, 0.3, 20.0, 1e-8).states.size());
}
BENCHMARK(BM_Trajectory)->Unit(benchmark::kMicrosecond);

static void BM_ShcCheck(benchmark::State& state) {
  const HarmonicMap f = power_map(2);
  const auto z = default_z_grid();
  const auto lam = unit_circle();
  for (auto _ : state) benchmark::DoNotOptimize(shc_check(f, z, lam).worst_margin);
}
BENCHMARK(BM_ShcCheck)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

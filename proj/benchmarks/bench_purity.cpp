#include <cmath>
#include <numbers>

#include <benchmark/benchmark.h>

#include "oscillent/fock_approx.hpp"
#include "oscillent/gaussian_analytic.hpp"
#include "oscillent/grid_oracle.hpp"
#include "oscillent/numberstate_exact.hpp"

namespace {

using oscillent::OscillatorSystem;

void BM_PurityCoherent(benchmark::State& state) {
  const auto sys = OscillatorSystem::from_dimensionless(5.0, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(oscillent::purity_coherent(sys));
}
BENCHMARK(BM_PurityCoherent);

// Argument: m = n.
void BM_PurityNumber(benchmark::State& state) {
  const auto sys = OscillatorSystem::from_dimensionless(5.0, 0.3);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oscillent::purity_number(sys, order, order));
  }
}
BENCHMARK(BM_PurityNumber)->DenseRange(0, 4);

void BM_PuritySuperposition(benchmark::State& state) {
  const auto sys = OscillatorSystem::from_dimensionless(1.0, 0.3);
  const double theta = std::numbers::pi / 6;
  const oscillent::Superposition sup{{{0, 1, std::cos(theta)}, {1, 0, std::sin(theta)}}};
  for (auto _ : state) benchmark::DoNotOptimize(oscillent::purity_superposition(sys, sup));
}
BENCHMARK(BM_PuritySuperposition);

// Argument: jmax = kmax.
void BM_PurityTruncated(benchmark::State& state) {
  const auto sys = OscillatorSystem::from_dimensionless(5.0, 0.5);
  const int t = static_cast<int>(state.range(0));
  const auto basis = oscillent::default_basis(sys, t, t);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oscillent::purity_truncated(sys, oscillent::NumberState{0, 1}, basis));
  }
}
BENCHMARK(BM_PurityTruncated)->Arg(5)->Arg(20)->Arg(40);

void BM_ConvergenceRun(benchmark::State& state) {
  const auto sys = OscillatorSystem::from_dimensionless(1.0, 0.1);
  const double h = std::numbers::sqrt2 / 2;
  const std::vector<oscillent::BasisChoice> bases{{h, h}, {1.0, 1.0}, {h, 1.0}, {1.0, h}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oscillent::convergence_run(sys, oscillent::NumberState{0, 1}, bases, 5));
  }
}
BENCHMARK(BM_ConvergenceRun);

// Argument: grid points per axis.
void BM_SchmidtAnalyze(benchmark::State& state) {
  const auto sys = OscillatorSystem::from_dimensionless(5.0, 0.3);
  oscillent::GridSpec grid;
  grid.n_points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oscillent::schmidt_analyze(sys, oscillent::NumberState{2, 1}, grid).purity);
  }
}
BENCHMARK(BM_SchmidtAnalyze)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

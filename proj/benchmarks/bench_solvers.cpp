#include <benchmark/benchmark.h>

#include <vector>

#include "wavecauchy/solvers.hpp"
#include "wavecauchy/spectral.hpp"

using namespace wavecauchy;

static void BM_SolvePoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CauchyProblem p(fields::gaussian(n, 0.5), fields::gaussian(n, 0.5));
  SolverSettings settings(n);
  settings.estimate_error = false;
  const std::vector<double> x(n, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_point(p, x, 1.0, settings));
}
BENCHMARK(BM_SolvePoint)->DenseRange(2, 5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_Dalembert(benchmark::State& state) {
  const CauchyProblem p(fields::gaussian(1, 0.35), fields::gaussian(1, 0.5));
  for (auto _ : state) benchmark::DoNotOptimize(solve_dalembert_point(p, 0.3, 2.0));
}
BENCHMARK(BM_Dalembert);

static void BM_SpectralSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int points = static_cast<int>(state.range(1));
  const CauchyProblem p(fields::zero(n), fields::gaussian(n, 0.35));
  const PeriodicGrid grid{n, points, 4.0};
  for (auto _ : state) benchmark::DoNotOptimize(spectral_solve(p, grid, 1.0));
}
BENCHMARK(BM_SpectralSolve)->Args({1, 4096})->Args({2, 256})->Args({3, 64})->Unit(benchmark::kMillisecond);

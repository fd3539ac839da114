#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "wavecauchy/gauss.hpp"
#include "wavecauchy/kernel.hpp"
#include "wavecauchy/reduction.hpp"
#include "wavecauchy/sphere_quadrature.hpp"

using namespace wavecauchy;

static void BM_GegenbauerRule(benchmark::State& state) {
  const int points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(GegenbauerRule(5, 1.0, points));
}
BENCHMARK(BM_GegenbauerRule)->Arg(16)->Arg(64)->Arg(256);

static void BM_SphereRuleBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SphereQuadrature::with_defaults(n));
}
BENCHMARK(BM_SphereRuleBuild)->DenseRange(2, 5);

static void BM_SphereIntegral(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto q = SphereQuadrature::with_defaults(n);
  const std::vector<double> c(n, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_on_sphere([](std::span<const double> y) { return std::exp(-y[0] * y[0]); }, c,
                                                 0.8, q));
  }
  state.SetItemsProcessed(state.iterations() * q.size());
}
BENCHMARK(BM_SphereIntegral)->DenseRange(2, 5);

static void BM_ReduceBall(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_ball_integral([](double s) { return std::cos(s); }, 1.5, n));
  }
}
BENCHMARK(BM_ReduceBall)->Arg(3)->Arg(4)->Arg(7);

static void BM_VerifyIdentity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> xi(n, 0.0);
  xi[0] = 7.0;
  const KernelQuery q(xi, 1.3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_identity(q));
}
BENCHMARK(BM_VerifyIdentity)->DenseRange(2, 7);

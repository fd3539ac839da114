#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "wavecauchy/solvers.hpp"
#include "wavecauchy/spectral.hpp"

using namespace wavecauchy;

namespace {

ScalarField sine1d() {
  return ScalarField{[](std::span<const double> x) { return std::sin(x[0]); }, Dimension{1}, std::nullopt, true,
                     "analytic"};
}

ScalarField linear1d() {
  return ScalarField{[](std::span<const double> x) { return x[0]; }, Dimension{1}, std::nullopt, false,
                     "polynomial"};
}

}  // namespace

TEST(Solvers, KirchhoffConstantVelocity) {
  const CauchyProblem p(fields::zero(3), fields::constant(3, 1.0));
  const SolverSettings s(3);
  const std::vector<double> x{0.3, -0.2, 0.1};
  for (double t : {0.5, 1.0, 2.0}) {
    const auto r = solve_odd_point(p, x, t, solver_stencil(Dimension{3}, t), s);
    EXPECT_NEAR(r.u, t, 1e-12 * t);
    EXPECT_EQ(r.method, Method::spherical_means);
  }
}

TEST(Solvers, PoissonConstantVelocity) {
  const CauchyProblem p(fields::zero(2), fields::constant(2, 1.0));
  const SolverSettings s(2);
  const std::vector<double> x{0.3, -0.2};
  for (double t : {0.5, 1.0, 2.0}) {
    const auto r = solve_even_point(p, x, t, solver_stencil(Dimension{2}, t), s);
    EXPECT_NEAR(r.u, t, 1e-12 * t);
    EXPECT_EQ(r.method, Method::weighted_means);
  }
}

TEST(Solvers, HarmonicDataOdd) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n : {3, 5, 7}) {
    const auto phi = fields::harmonic(n, 6);
    const auto psi = fields::harmonic(n, 5);
    const CauchyProblem p(phi, psi);
    const SolverSettings s(n);
    std::vector<double> x(n);
    for (double& v : x) v = u(rng);
    const double t = 1.0;
    const double exact = phi(x) + t * psi(x);
    const auto r = solve_point(p, x, t, s);
    EXPECT_LE(std::abs(r.u - exact) / std::max(1.0, std::abs(exact)), 1e-8) << n;
  }
}

TEST(Solvers, HarmonicDataEven) {
  for (int n : {2, 4}) {
    const auto phi = fields::harmonic(n, 6);
    const auto psi = fields::harmonic(n, 1);
    const CauchyProblem p(phi, psi);
    const SolverSettings s(n);
    const std::vector<double> x(n, 0.3);
    const double t = 0.7;
    const double exact = phi(x) + t * psi(x);
    const auto r = solve_point(p, x, t, s);
    EXPECT_LE(std::abs(r.u - exact) / std::max(1.0, std::abs(exact)), 1e-8) << n;
  }
}

TEST(Solvers, GaussianAgainstSpectralThreeDimensions) {
  const CauchyProblem p(fields::zero(3), fields::gaussian(3, 0.35));
  const PeriodicGrid grid{3, 64, 4.0};
  const auto oracle = spectral_solve(p, grid, 1.0);
  const std::vector<double> x(3, 0.0);
  const auto r = solve_point(p, x, 1.0, SolverSettings(3));
  EXPECT_LE(std::abs(r.u - oracle.at(x)) / std::abs(oracle.at(x)), 1e-3);
}

TEST(Solvers, GaussianAgainstSpectralTwoDimensions) {
  const CauchyProblem p(fields::zero(2), fields::gaussian(2, 0.35));
  const PeriodicGrid grid{2, 256, 4.0};
  const auto oracle = spectral_solve(p, grid, 1.0);
  const std::vector<double> x{0.0, 0.0};
  const auto r = solve_point(p, x, 1.0, SolverSettings(2));
  EXPECT_LE(std::abs(r.u - oracle.at(x)) / std::abs(oracle.at(x)), 1e-3);
}

TEST(Solvers, DalembertExamples) {
  const CauchyProblem lin(linear1d(), fields::zero(1));
  EXPECT_NEAR(solve_dalembert_point(lin, 0.7, 1.3).u, 0.7, 1e-15);
  const CauchyProblem vel(fields::zero(1), fields::constant(1, 1.0));
  EXPECT_NEAR(solve_dalembert_point(vel, -0.4, 2.5).u, 2.5, 1e-14);
  const CauchyProblem sn(sine1d(), fields::zero(1));
  for (double t : {0.1, 1.0, 3.0}) {
    EXPECT_NEAR(solve_dalembert_point(sn, 0.9, t).u, std::sin(0.9) * std::cos(t), 1e-15);
  }
  const auto r = solve_dalembert_point(vel, 0.0, 1.0);
  EXPECT_EQ(r.method, Method::dalembert);
  EXPECT_LE(r.error_estimate, 1e-12);
}

TEST(Solvers, TimeZeroReturnsPhi) {
  const auto phi = fields::gaussian(3, 0.5);
  const CauchyProblem p(phi, fields::constant(3, 1.0));
  const std::vector<double> x{0.1, 0.2, 0.3};
  EXPECT_DOUBLE_EQ(solve_point(p, x, 0.0, SolverSettings(3)).u, phi(x));
  const CauchyProblem q(fields::gaussian(2, 0.5), fields::zero(2));
  const std::vector<double> y{0.1, 0.2};
  EXPECT_DOUBLE_EQ(solve_point(q, y, 0.0, SolverSettings(2)).u, q.phi(y));
}

TEST(Solvers, SmallTimeIsStencilError) {
  const CauchyProblem p(fields::zero(3), fields::constant(3, 1.0));
  const std::vector<double> x(3, 0.0);
  auto spec = RadialDerivativeSpec::standard(0, 0.05);
  EXPECT_THROW(solve_odd_point(p, x, 0.2, spec, SolverSettings(3)), StencilError);
}

TEST(Solvers, UsageErrors) {
  const CauchyProblem p3(fields::zero(3), fields::constant(3, 1.0));
  const CauchyProblem p2(fields::zero(2), fields::constant(2, 1.0));
  const std::vector<double> x3(3, 0.0), x2(2, 0.0);
  EXPECT_THROW(solve_even_point(p3, x3, 1.0, solver_stencil(Dimension{3}, 1.0), SolverSettings(3)), UsageError);
  EXPECT_THROW(solve_odd_point(p2, x2, 1.0, solver_stencil(Dimension{2}, 1.0), SolverSettings(2)), UsageError);
  EXPECT_THROW(solve_dalembert_point(p2, 0.0, 1.0), UsageError);
  EXPECT_THROW(solve_point(p3, x2, 1.0, SolverSettings(3)), UsageError);
  EXPECT_THROW(CauchyProblem(fields::zero(2), fields::zero(3)), UsageError);
  EXPECT_THROW(solve_point(p3, x3, -1.0, SolverSettings(3)), DomainError);
}

// For n = 3 the psi term needs no derivative, so only phi feeds the estimate.
TEST(Solvers, ErrorEstimateIsSmallForSmoothData) {
  const CauchyProblem p(fields::gaussian(3, 0.5), fields::zero(3));
  const std::vector<double> x(3, 0.2);
  const auto r = solve_point(p, x, 1.0, SolverSettings(3));
  EXPECT_GT(r.error_estimate, 0.0);
  EXPECT_LT(r.error_estimate, 1e-5);
}

TEST(Solvers, MethodNames) {
  EXPECT_EQ(to_string(Method::spherical_means), "spherical_means");
  EXPECT_EQ(to_string(Method::spectral), "spectral");
}

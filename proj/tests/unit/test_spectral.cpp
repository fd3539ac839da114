#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "wavecauchy/spectral.hpp"

using namespace wavecauchy;

TEST(PeriodicGrid, NodesAndIndices) {
  const PeriodicGrid g{2, 8, 2.0};
  EXPECT_EQ(g.size(), 64u);
  EXPECT_DOUBLE_EQ(g.spacing(), 0.5);
  const auto x = g.node(9);  // row 1, column 1
  EXPECT_DOUBLE_EQ(x[0], -1.5);
  EXPECT_DOUBLE_EQ(x[1], -1.5);
  EXPECT_EQ(g.index_of(x), 9u);
  const std::vector<double> off{0.1, 0.0};
  EXPECT_THROW(g.index_of(off), UsageError);
  const auto k = g.wavenumber(7);
  EXPECT_DOUBLE_EQ(k[0], 0.0);
  EXPECT_DOUBLE_EQ(k[1], -std::numbers::pi / 2.0);
  EXPECT_THROW((PeriodicGrid{1, 7, 1.0}.validate()), DomainError);
  EXPECT_THROW((PeriodicGrid{1, 8, 0.0}.validate()), DomainError);
}

TEST(Spectral, SingleCosineMode) {
  const double L = std::numbers::pi;
  const std::vector<double> k{2.0, 1.0};
  const CauchyProblem p(fields::cosine_mode(k), fields::zero(2));
  const PeriodicGrid g{2, 16, L};
  const double t = 0.3;
  const auto sol = spectral_solve(p, g, t);
  const double w = std::sqrt(5.0);
  for (std::size_t i = 0; i < g.size(); i += 7) {
    const auto x = g.node(i);
    EXPECT_NEAR(sol.values[i], std::cos(2 * x[0] + x[1]) * std::cos(w * t), 1e-13);
  }
}

TEST(Spectral, ConstantVelocity) {
  const CauchyProblem p(fields::zero(3), fields::constant(3, 2.5));
  const PeriodicGrid g{3, 8, 1.0};
  const auto sol = spectral_solve(p, g, 0.4);
  for (double v : sol.values) EXPECT_NEAR(v, 1.0, 1e-14);
  EXPECT_LE(sol.error_estimate, 1e-15);
}

TEST(Spectral, GaussianMatchesDalembert) {
  const CauchyProblem p(fields::gaussian(1, 0.35), fields::gaussian(1, 0.5, {0.3}));
  const PeriodicGrid g{1, 4096, 10.0};
  const double t = 2.0;
  const auto sol = spectral_solve(p, g, t);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); i += 16) {
    const double x = g.node(i)[0];
    if (std::abs(x) > 6.0) continue;
    worst = std::max(worst, std::abs(sol.values[i] - solve_dalembert_point(p, x, t).u));
  }
  EXPECT_LE(worst, 1e-6);
}

TEST(Spectral, GuardErrors) {
  const CauchyProblem p(fields::bump(1, 1.0), fields::zero(1));
  EXPECT_THROW(spectral_solve(p, PeriodicGrid{1, 64, 0.9}, 0.0), DomainSizeError);
  const auto state = SpectralState::from_problem(p, PeriodicGrid{1, 64, 2.0});
  EXPECT_NO_THROW(state.solution(0.5));
  EXPECT_THROW(state.solution(1.5), DomainSizeError);
  EXPECT_THROW(state.solution(-0.1), DomainError);
  const ScalarField unbounded{[](std::span<const double> x) { return x[0]; }, Dimension{1}, std::nullopt, false, ""};
  EXPECT_THROW(SpectralState::from_problem(CauchyProblem(unbounded, fields::zero(1)), PeriodicGrid{1, 8, 1.0}),
               DomainSizeError);
  EXPECT_THROW(SpectralState::from_problem(p, PeriodicGrid{2, 8, 2.0}), UsageError);
}

TEST(Spectral, HermitianAndEnergy) {
  const CauchyProblem p(fields::gaussian(1, 0.35), fields::gaussian(1, 0.5, {0.3}));
  const auto state = SpectralState::from_problem(p, PeriodicGrid{1, 4096, 10.0});
  EXPECT_LE(state.hermitian_defect(), 1e-12);
  const double e0 = state.energy(0.0);
  for (double t : {0.5, 1.0, 3.0}) EXPECT_NEAR(state.energy(t), e0, 1e-10 * e0);
}

TEST(Spectral, TimeZeroRecoversPhi) {
  const auto phi = fields::gaussian(2, 0.4);
  const PeriodicGrid g{2, 32, 4.0};
  const auto sol = spectral_solve(CauchyProblem(phi, fields::zero(2)), g, 0.0);
  for (std::size_t i = 0; i < g.size(); i += 13) EXPECT_NEAR(sol.values[i], phi(g.node(i)), 1e-14);
}

#include <gtest/gtest.h>

#include <cmath>

#include "wavecauchy/distribution.hpp"
#include "wavecauchy/fields.hpp"

using namespace wavecauchy;

namespace {

DistributionFunctional small(int n, double R) {
  // The test functions below are radial, so a coarse angular rule is exact for them.
  DistributionFunctional::Options o;
  o.sphere = SphereQuadrature(n, 8, 16);
  return DistributionFunctional(n, R, o);
}

}  // namespace

TEST(Distribution, ZeroTestFunction) {
  const auto c = distribution_fourier_check(small(3, 1.0), [](std::span<const double>) { return 0.0; },
                                            FourierBox{2.0, 16, 1e-14});
  EXPECT_EQ(c.lhs, 0.0);
  EXPECT_EQ(c.rhs, 0.0);
}

TEST(Distribution, GaussianThreeDimensions) {
  const auto phi = [](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::exp(-s);
  };
  const auto c = distribution_fourier_check(small(3, 1.0), phi, FourierBox{6.0, 64, 1e-14});
  EXPECT_LE(std::abs(c.lhs - c.rhs) / std::abs(c.rhs), 1e-6);
  EXPECT_LE(std::abs(c.lhs_imag), 1e-12);
}

TEST(Distribution, Linearity) {
  const auto f = fields::gaussian(2, 1.0);
  const double a = -2.75;
  const auto T = small(2, 0.5);
  const FourierBox box{8.5, 48, 1e-14};
  const auto c1 = distribution_fourier_check(T, f.evaluator, box);
  const auto c2 = distribution_fourier_check(T, [&](std::span<const double> x) { return a * f(x); }, box);
  EXPECT_NEAR(c2.lhs, a * c1.lhs, 1e-12 * std::abs(a * c1.lhs));
  EXPECT_NEAR(c2.rhs, a * c1.rhs, 1e-12 * std::abs(a * c1.rhs));
}

TEST(Distribution, BoxTooSmallIsConfigError) {
  const auto f = fields::gaussian(2, 1.0);
  try {
    distribution_fourier_check(small(2, 1.0), f.evaluator, FourierBox{3.0, 16, 1e-14});
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    ASSERT_EQ(e.keys().size(), 1u);
    EXPECT_EQ(e.keys()[0], "fourier.half_width");
  }
}

// T_R only sees the closed ball of radius R (plus the stencil reach).
TEST(Distribution, CompactSupport) {
  for (int n : {3, 4, 5}) {
    const DistributionFunctional T(n, 1.0);
    const double inner = T.reach() + 0.1;
    // Smooth bump supported in the shell inner < |x| < inner + 1.
    const auto shell = [inner](std::span<const double> x) {
      double r = 0.0;
      for (double v : x) r += v * v;
      r = std::sqrt(r);
      const double u = (r - inner - 0.5) / 0.5;
      return std::abs(u) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - u * u)) : 0.0;
    };
    EXPECT_LE(std::abs(T.action(RealPointFunction(shell))), 1e-10) << n;
  }
}

TEST(Distribution, ActionOnOneIsR) {
  // phi = 1 near the ball: the action reproduces T_R(1) = sin(R|xi|)/|xi| at xi = 0 = R.
  for (int n = 2; n <= 6; ++n) {
    const DistributionFunctional T(n, 0.8);
    EXPECT_NEAR(T.action(RealPointFunction([](std::span<const double>) { return 1.0; })), 0.8, 1e-9) << n;
  }
}

TEST(Distribution, Constants) {
  EXPECT_DOUBLE_EQ(DistributionFunctional(5, 1.0).constant(), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(DistributionFunctional(4, 1.0).constant(), 1.0 / 8.0);
  EXPECT_EQ(DistributionFunctional(7, 1.0).order(), 2);
  EXPECT_THROW(DistributionFunctional(1, 1.0), DomainError);
  EXPECT_THROW(DistributionFunctional(3, 0.0), DomainError);
}

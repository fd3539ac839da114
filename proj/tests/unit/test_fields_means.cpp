#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "wavecauchy/fields.hpp"
#include "wavecauchy/means.hpp"

using namespace wavecauchy;

TEST(Fields, GaussianValuesAndSupport) {
  const auto g = fields::gaussian(3, 0.5, {1.0, 0.0, 0.0}, 2.0);
  const std::vector<double> c{1.0, 0.0, 0.0};
  EXPECT_DOUBLE_EQ(g(c), 2.0);
  ASSERT_TRUE(g.support_radius.has_value());
  EXPECT_TRUE(support_holds(g));
  // Support is measured from the origin, so it covers the offset centre.
  EXPECT_GT(*g.support_radius, 1.0 + 0.5 * std::sqrt(2.0 * std::log(2.0 / 1e-14)) - 1e-9);
}

TEST(Fields, BumpIsCompact) {
  const auto b = fields::bump(2, 0.5);
  const std::vector<double> origin{0.0, 0.0}, edge{0.5, 0.0}, inside{0.25, 0.0};
  EXPECT_DOUBLE_EQ(b(origin), 1.0);
  EXPECT_EQ(b(edge), 0.0);
  EXPECT_GT(b(inside), 0.0);
  EXPECT_DOUBLE_EQ(*b.support_radius, 0.5);
  EXPECT_TRUE(support_holds(b));
}

TEST(Fields, HarmonicAreHarmonic) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double h = 1e-3;
  for (int id = 0; id < fields::kHarmonicCount; ++id) {
    const auto f = fields::harmonic(3, id);
    std::vector<double> x(3);
    for (double& v : x) v = u(rng);
    double lap = 0.0;
    for (int k = 0; k < 3; ++k) {
      auto p = x, m = x;
      p[k] += h;
      m[k] -= h;
      lap += (f(p) - 2 * f(x) + f(m)) / (h * h);
    }
    EXPECT_NEAR(lap, 0.0, 1e-6) << id;
  }
}

TEST(Fields, HarmonicNeedsDimensions) {
  EXPECT_THROW(fields::harmonic(1, 2), UsageError);
  EXPECT_THROW(fields::harmonic(2, 5), UsageError);
  EXPECT_THROW(fields::harmonic(3, 7), UsageError);
  EXPECT_NO_THROW(fields::harmonic(1, 1));
}

TEST(Fields, ConstantsAndCombination) {
  const auto z = fields::zero(2);
  ASSERT_TRUE(z.support_radius.has_value());
  EXPECT_EQ(*z.support_radius, 0.0);
  const auto c = fields::constant(2, 3.0);
  EXPECT_TRUE(c.periodic);
  EXPECT_FALSE(c.support_radius.has_value());
  const auto s = fields::combine(2.0, fields::bump(2, 0.5), -1.0, fields::bump(2, 1.0));
  const std::vector<double> o{0.0, 0.0};
  EXPECT_DOUBLE_EQ(s(o), 1.0);
  EXPECT_DOUBLE_EQ(*s.support_radius, 1.0);
  EXPECT_THROW(fields::combine(1.0, fields::zero(2), 1.0, fields::zero(3)), UsageError);
  EXPECT_THROW(fields::gaussian(2, 0.0), DomainError);
  EXPECT_THROW(fields::gaussian(2, 1.0, {0.0}), UsageError);
}

TEST(SphericalMean, Constant) {
  const auto q = SphereQuadrature::with_defaults(3);
  const std::vector<double> x{0.1, 0.2, 0.3};
  EXPECT_NEAR(spherical_mean(fields::constant(3, 1.0), x, 0.7, q), 1.0, 1e-14);
}

TEST(SphericalMean, HarmonicMeanValueProperty) {
  for (int n : {2, 3, 5}) {
    const auto q = SphereQuadrature::with_defaults(n);
    const std::vector<double> x(n, 0.4);
    const auto f = fields::harmonic(n, 1);
    EXPECT_NEAR(spherical_mean(f, x, 1.3, q), x[0], 1e-13) << n;
    const auto g = fields::harmonic(n, n >= 3 ? 6 : 4);
    EXPECT_NEAR(spherical_mean(g, x, 0.9, q), g(x), 1e-12) << n;
  }
}

TEST(SphericalMean, RadiusSquared) {
  const auto q = SphereQuadrature::with_defaults(3);
  ScalarField r2{[](std::span<const double> y) { return y[0] * y[0] + y[1] * y[1] + y[2] * y[2]; }, Dimension{3},
                 std::nullopt, false, "polynomial"};
  const std::vector<double> o(3, 0.0);
  EXPECT_NEAR(spherical_mean(r2, o, 1.5, q), 2.25, 1e-13);
}

TEST(SphericalMean, Errors) {
  const auto q = SphereQuadrature::with_defaults(3);
  const std::vector<double> x2(2, 0.0), x3(3, 0.0);
  EXPECT_THROW(spherical_mean(fields::constant(3, 1.0), x2, 1.0, q), UsageError);
  EXPECT_THROW(spherical_mean(fields::constant(2, 1.0), x2, 1.0, q), UsageError);
  EXPECT_THROW(spherical_mean(fields::constant(3, 1.0), x3, 0.0, q), DomainError);
}

TEST(WeightedBallMean, ConstantTwoDimensions) {
  const std::vector<double> x{0.3, -0.1};
  for (double t : {0.5, 1.0, 2.0}) {
    EXPECT_NEAR(weighted_ball_mean(fields::constant(2, 1.0), x, t), 2.0 / t, 1e-13);
  }
}

TEST(WeightedBallMean, ConstantFourDimensions) {
  const std::vector<double> x(4, 0.2);
  for (double t : {0.5, 1.0, 2.0}) {
    EXPECT_NEAR(weighted_ball_mean(fields::constant(4, 1.0), x, t), 8.0 / (3.0 * t), 1e-13);
  }
}

TEST(WeightedBallMean, ZeroAndErrors) {
  const std::vector<double> x(2, 0.0), x3(3, 0.0);
  EXPECT_EQ(weighted_ball_mean(fields::zero(2), x, 1.0), 0.0);
  EXPECT_THROW(weighted_ball_mean(fields::constant(3, 1.0), x3, 1.0), UsageError);
  EXPECT_THROW(weighted_ball_mean(fields::constant(2, 1.0), x, -1.0), DomainError);
}

TEST(WeightedBallMean, HarmonicFactorsThroughConstant) {
  const std::vector<double> x{0.5, -0.3};
  const auto f = fields::harmonic(2, 6);
  EXPECT_NEAR(weighted_ball_mean(f, x, 1.2), f(x) * 2.0 / 1.2, 1e-12);
}

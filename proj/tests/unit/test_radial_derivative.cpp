#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "wavecauchy/radial_derivative.hpp"

using namespace wavecauchy;

TEST(RadialDerivative, SquareOnce) {
  const auto spec = RadialDerivativeSpec::standard(1, 0.05);
  for (double t : {0.5, 1.0, 3.0}) {
    EXPECT_NEAR(iterated_radial_derivative([](double s) { return s * s; }, spec, t), 2.0, 1e-11);
  }
}

TEST(RadialDerivative, FourthPowerTwice) {
  const auto spec = RadialDerivativeSpec::standard(2, 0.05);
  for (double t : {0.7, 1.0, 2.0}) {
    EXPECT_NEAR(iterated_radial_derivative([](double s) { return std::pow(s, 4); }, spec, t), 8.0, 1e-9);
  }
}

TEST(RadialDerivative, CubeOnceAtTwo) {
  const auto spec = RadialDerivativeSpec::standard(1, 0.05);
  EXPECT_NEAR(iterated_radial_derivative([](double s) { return s * s * s; }, spec, 2.0), 6.0, 1e-11);
}

// (1/t d/dt)^m t^k = k (k-2) ... (k-2m+2) t^{k-2m}, exact for k <= stencil degree.
TEST(RadialDerivative, ExactOnMonomials) {
  for (int m = 0; m <= 3; ++m) {
    const auto spec = RadialDerivativeSpec::standard(m, 0.04);
    for (int k = 0; k <= spec.stencil_degree; ++k) {
      const double t = 1.3;
      double coeff = 1.0;
      for (int j = 0; j < m; ++j) coeff *= (k - 2 * j);
      const double expected = coeff * std::pow(t, k - 2 * m);
      const double got = iterated_radial_derivative([k](double s) { return std::pow(s, k); }, spec, t);
      EXPECT_NEAR(got, expected, 1e-8 * std::max(1.0, std::abs(expected))) << "m " << m << " k " << k;
    }
  }
}

TEST(RadialDerivative, ExtraDerivative) {
  const auto spec = RadialDerivativeSpec{1, 0.04, 8};
  // d/dt (1/t d/dt) t^5 = d/dt 5 t^3 = 15 t^2
  const double t = 1.1;
  EXPECT_NEAR(iterated_radial_derivative([](double s) { return std::pow(s, 5); }, spec, t, 1), 15 * t * t, 1e-8);
}

// Smooth non-polynomial data converges: (1/t d/dt) sin t = cos t / t.
TEST(RadialDerivative, SmoothFunction) {
  const auto spec = RadialDerivativeSpec::standard(1, 0.02);
  const double t = 1.5;
  EXPECT_NEAR(iterated_radial_derivative([](double s) { return std::sin(s); }, spec, t), std::cos(t) / t, 1e-11);
}

TEST(RadialDerivative, ComplexSamples) {
  const auto spec = RadialDerivativeSpec::standard(1, 0.05);
  const auto v = iterated_radial_derivative([](double s) { return std::complex<double>(s * s, -s * s); }, spec, 1.0);
  EXPECT_NEAR(v.real(), 2.0, 1e-11);
  EXPECT_NEAR(v.imag(), -2.0, 1e-11);
}

TEST(RadialDerivative, StencilReachingZeroThrows) {
  const auto spec = RadialDerivativeSpec::standard(1, 0.1);  // half width 0.3
  EXPECT_THROW(iterated_radial_derivative([](double s) { return s; }, spec, 0.3), StencilError);
  EXPECT_THROW(stencil_radii(spec, 0.2), StencilError);
}

TEST(RadialDerivative, NonFiniteSampleThrows) {
  const auto spec = RadialDerivativeSpec::standard(1, 0.1);
  EXPECT_THROW(iterated_radial_derivative([](double s) { return s > 1.0 ? NAN : s; }, spec, 1.0), EvaluationError);
}

TEST(RadialDerivative, SpecValidation) {
  EXPECT_THROW((RadialDerivativeSpec{1, 0.1, 5}.validate()), DomainError);
  EXPECT_THROW((RadialDerivativeSpec{3, 0.1, 4}.validate()), DomainError);
  EXPECT_THROW((RadialDerivativeSpec{1, 0.0, 6}.validate()), DomainError);
  EXPECT_THROW(RadialDerivativeSpec::standard(1, 0.2).validate_for_radius(1.0), StencilError);
  EXPECT_NO_THROW(RadialDerivativeSpec::standard(1, 0.1).validate_for_radius(1.0));
}

TEST(RadialDerivative, StencilShape) {
  const auto spec = RadialDerivativeSpec::standard(2, 0.1);
  EXPECT_EQ(spec.points(), 9);
  EXPECT_DOUBLE_EQ(spec.half_width(), 0.4);
  const auto radii = stencil_radii(spec, 1.0);
  ASSERT_EQ(radii.size(), 9u);
  EXPECT_DOUBLE_EQ(radii.front(), 0.6);
  EXPECT_DOUBLE_EQ(radii.back(), 1.4);
  const auto w = radial_derivative_weights(spec, 1.0);
  double sum = 0.0;
  for (double v : w) sum += v;
  EXPECT_NEAR(sum, 0.0, 1e-9);  // annihilates constants
}

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "wavecauchy/constants.hpp"
#include "wavecauchy/errors.hpp"
#include "wavecauchy/sphere_quadrature.hpp"

using namespace wavecauchy;

namespace {

// Surface integral of prod x_i^{a_i} over the unit sphere in R^n.
double monomial_integral(const std::vector<int>& a) {
  double log_num = 0.0, half_sum = 0.0;
  for (int k : a) {
    if (k % 2) return 0.0;
    log_num += std::lgamma(0.5 * (k + 1));
    half_sum += 0.5 * (k + 1);
  }
  return 2.0 * std::exp(log_num - std::lgamma(half_sum));
}

double integrate_monomial(const SphereQuadrature& q, const std::vector<int>& a) {
  const std::vector<double> origin(a.size(), 0.0);
  return integrate_on_sphere(
      [&](std::span<const double> x) {
        double v = 1.0;
        for (std::size_t i = 0; i < a.size(); ++i) v *= std::pow(x[i], a[i]);
        return v;
      },
      origin, 1.0, q);
}

}  // namespace

TEST(SphereQuadrature, WeightsSumToArea) {
  for (int n = 1; n <= 8; ++n) {
    const auto q = SphereQuadrature::with_defaults(n);
    double sum = 0.0;
    for (double w : q.weights()) sum += w;
    EXPECT_NEAR(sum, unit_sphere_area(n), 1e-13 * unit_sphere_area(n)) << n;
  }
}

TEST(SphereQuadrature, NodesOnUnitSphere) {
  for (int n = 2; n <= 6; ++n) {
    const SphereQuadrature q(n, 5, 8);
    for (std::size_t i = 0; i < q.size(); ++i) {
      double r2 = 0.0;
      for (double c : q.node(i)) r2 += c * c;
      EXPECT_NEAR(r2, 1.0, 1e-14);
    }
  }
}

TEST(SphereQuadrature, OneDimensionIsTwoPoints) {
  const auto q = SphereQuadrature::with_defaults(1);
  ASSERT_EQ(q.size(), 2u);
  EXPECT_DOUBLE_EQ(q.node(0)[0] * q.node(1)[0], -1.0);
  EXPECT_DOUBLE_EQ(q.weights()[0], 1.0);
}

// Random monomials of degree <= order() are integrated exactly.
TEST(SphereQuadrature, ExactUpToOrder) {
  std::mt19937 rng(11);
  for (int n = 2; n <= 6; ++n) {
    const SphereQuadrature q(n, 5, 10);
    const int order = q.order();
    EXPECT_EQ(order, 9);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> a(n, 0);
      std::uniform_int_distribution<int> pick(0, n - 1);
      const int degree = std::uniform_int_distribution<int>(0, order)(rng);
      for (int d = 0; d < degree; ++d) ++a[pick(rng)];
      EXPECT_NEAR(integrate_monomial(q, a), monomial_integral(a), 1e-13 * std::max(1.0, monomial_integral(a))) << "n " << n << " degree " << degree;
    }
  }
}

TEST(SphereQuadrature, NotExactBeyondOrder) {
  const SphereQuadrature q(3, 2, 4);
  EXPECT_GT(std::abs(integrate_monomial(q, {0, 0, 4}) - monomial_integral({0, 0, 4})), 1e-6);
}

TEST(SphereQuadrature, ScalesWithRadiusAndCenter) {
  const auto q = SphereQuadrature::with_defaults(3);
  const std::vector<double> c{1.0, -2.0, 0.5};
  // |y - c|^2 = R^2 on the sphere, so the integral is R^2 * 4 pi R^2.
  const double R = 1.7;
  const double v = integrate_on_sphere(
      [&](std::span<const double> y) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += (y[k] - c[k]) * (y[k] - c[k]);
        return s;
      },
      c, R, q);
  EXPECT_NEAR(v, R * R * unit_sphere_area(3) * R * R, 1e-13 * v);
}

TEST(SphereQuadrature, ComplexIntegrand) {
  const auto q = SphereQuadrature::with_defaults(3);
  const std::vector<double> origin(3, 0.0);
  // int_{S^2} exp(-i x3 k) = 4 pi sin(k)/k
  const double k = 2.5;
  const auto v = integrate_on_sphere(
      [&](std::span<const double> x) { return std::polar(1.0, -k * x[2]); }, origin, 1.0, q);
  EXPECT_NEAR(v.real(), unit_sphere_area(3) * std::sin(k) / k, 1e-13);
  EXPECT_NEAR(v.imag(), 0.0, 1e-13);
}

TEST(SphereQuadrature, DimensionMismatch) {
  const auto q = SphereQuadrature::with_defaults(3);
  const std::vector<double> c(2, 0.0);
  EXPECT_THROW(integrate_on_sphere([](std::span<const double>) { return 1.0; }, c, 1.0, q), UsageError);
}

TEST(SphereQuadrature, InvalidSizes) {
  EXPECT_THROW(SphereQuadrature(3, 0, 4), DomainError);
  EXPECT_THROW(SphereQuadrature(3, 4, 0), DomainError);
  EXPECT_THROW(SphereQuadrature(13, 4, 4), DomainError);
}

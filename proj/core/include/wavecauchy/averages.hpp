#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <utility>

#include "wavecauchy/constants.hpp"
#include "wavecauchy/gauss.hpp"
#include "wavecauchy/sphere_quadrature.hpp"

namespace wavecauchy {

/// (1 / (omega_n t^{n-1})) times the integral of g over the sphere |y - center| = t.
template <class G>
auto sphere_average(G&& g, std::span<const double> center, double t, const SphereQuadrature& q) {
  const int n = q.dimension();
  return integrate_on_sphere(g, center, t, q) / (unit_sphere_area(n) * std::pow(t, n - 1));
}

/// Radial-angular rule for averages over a ball with the weight
/// (t^2 - |y - center|^2)^{-1/2}. The radius is r = t sin(theta) with
/// Gauss-Legendre nodes in theta on [0, pi/2]; this removes the inverse
/// square root at r = t.
class BallRule {
 public:
  static constexpr int kDefaultRadialNodes = 64;

  /// Per-dimension defaults. n = 2 keeps the full 64-node radial rule; for
  /// n >= 4 the rule is (n - 1) sphere integrals deep, so it is smaller.
  explicit BallRule(int n) : BallRule(default_angular(n), default_radial_nodes(n)) {}
  BallRule(int n, int radial_nodes) : BallRule(SphereQuadrature::with_defaults(n), radial_nodes) {}
  BallRule(SphereQuadrature angular, int radial_nodes)
      : angular_(std::move(angular)),
        radial_(gauss_legendre_on(radial_nodes, 0.0, 0.5 * std::numbers::pi)) {}

  int dimension() const noexcept { return angular_.dimension(); }
  const SphereQuadrature& angular() const noexcept { return angular_; }
  const QuadratureRule& radial() const noexcept { return radial_; }

  static int default_radial_nodes(int n) { return n <= 2 ? kDefaultRadialNodes : n == 4 ? 24 : 12; }
  static SphereQuadrature default_angular(int n) {
    return n == 4 ? SphereQuadrature(n, 12, 24) : SphereQuadrature::with_defaults(n);
  }

 private:
  SphereQuadrature angular_;
  QuadratureRule radial_;
};

/// Integral over B(center, t) of (t^2 - |y - center|^2)^{-1/2} g(y) dy.
template <class G>
auto weighted_ball_integral(G&& g, std::span<const double> center, double t, const BallRule& rule) {
  using Value = decltype(g(std::span<const double>{}));
  const auto& radial = rule.radial();
  Value sum{};
  // dr / sqrt(t^2 - r^2) = d(theta); the r^{n-1} factor is inside integrate_on_sphere.
  for (std::size_t i = 0; i < radial.size(); ++i) {
    const double r = t * std::sin(radial.nodes[i]);
    sum += radial.weights[i] * integrate_on_sphere(g, center, r, rule.angular());
  }
  return sum;
}

/// (1 / (v_n t^n)) * weighted_ball_integral: the weighted ball mean.
template <class G>
auto weighted_ball_average(G&& g, std::span<const double> center, double t, const BallRule& rule) {
  const int n = rule.dimension();
  return weighted_ball_integral(g, center, t, rule) / (unit_ball_volume(n) * std::pow(t, n));
}

}  // namespace wavecauchy

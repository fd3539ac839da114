#include "wavecauchy/reduction.hpp"

#include <cmath>
#include <numbers>

#include "wavecauchy/constants.hpp"
#include "wavecauchy/dimension.hpp"
#include "wavecauchy/gauss.hpp"

namespace wavecauchy {
namespace {

void check_reduction_args(double R, int n) {
  Dimension{n};
  if (n < 3) throw DomainError("reduction formulas need n >= 3, got " + std::to_string(n));
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("radius must be positive and finite");
}

}  // namespace

GegenbauerRule::GegenbauerRule(double exponent, double R, int points, int)
    : R_(R), exponent_(exponent) {
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("radius must be positive and finite");
  const auto& base = *gauss_gegenbauer(points, exponent);
  const double scale = std::pow(R, 2.0 * exponent + 1.0);
  nodes_.resize(base.size());
  weights_.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    nodes_[i] = R * base.nodes[i];
    weights_[i] = scale * base.weights[i];
  }
}

GegenbauerRule::GegenbauerRule(int n, double R, int points)
    : GegenbauerRule(0.5 * (Dimension(n).n() - 3), R, points, 0) {
  if (n < 3) throw DomainError("Gegenbauer weight (R^2-s^2)^{(n-3)/2} needs n >= 3");
}

GegenbauerRule GegenbauerRule::with_exponent(double exponent, double R, int points) {
  return GegenbauerRule(exponent, R, points, 0);
}

double GegenbauerRule::total_mass() const {
  const double a = exponent_;
  return std::pow(R_, 2.0 * a + 1.0) * std::sqrt(std::numbers::pi) *
         std::exp(std::lgamma(a + 1.0) - std::lgamma(a + 1.5));
}

double reduce_sphere_integral(const std::function<double(double)>& f, double R, int n,
                              const ReductionOptions& options) {
  check_reduction_args(R, n);
  const GegenbauerRule rule(n, R, options.inner_points);
  return unit_sphere_area(n - 1) * R * rule.integrate(f);
}

double reduce_ball_integral(const std::function<double(double)>& f, double R, int n,
                            const ReductionOptions& options) {
  check_reduction_args(R, n);
  // Inner integral at radius rho is rho^{n-2} int_{-1}^{1} f(rho x)(1-x^2)^{(n-3)/2} dx,
  // so the outer integrand rho^{n-1} g(rho) is smooth on [0, R].
  const auto& inner = *gauss_gegenbauer(options.inner_points, 0.5 * (n - 3));
  const auto outer = gauss_legendre_on(options.outer_points, 0.0, R);
  double total = 0.0;
  for (std::size_t j = 0; j < outer.size(); ++j) {
    const double rho = outer.nodes[j];
    double g = 0.0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      const double v = f(rho * inner.nodes[i]);
      if (!std::isfinite(v)) {
        throw EvaluationError("integrand is not finite at s = " + std::to_string(rho * inner.nodes[i]));
      }
      g += inner.weights[i] * v;
    }
    total += outer.weights[j] * std::pow(rho, n - 1) * g;
  }
  return unit_sphere_area(n - 1) * total;
}

}  // namespace wavecauchy

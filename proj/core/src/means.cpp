#include "wavecauchy/means.hpp"

#include <cmath>
#include <string>

namespace wavecauchy {
namespace {

void check_point(const ScalarField& psi, std::span<const double> x, int rule_dim, double t) {
  const auto n = static_cast<std::size_t>(psi.dim.n());
  if (x.size() != n || rule_dim != psi.dim.n()) {
    throw UsageError("dimension mismatch: field n = " + std::to_string(n) + ", point has " +
                     std::to_string(x.size()) + " components, rule n = " + std::to_string(rule_dim));
  }
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("mean radius must be positive, got " + std::to_string(t));
}

double finite_or_throw(double v) {
  if (!std::isfinite(v)) throw EvaluationError("field produced a non-finite value inside a mean");
  return v;
}

}  // namespace

double spherical_mean(const ScalarField& psi, std::span<const double> x, double t, const SphereQuadrature& q) {
  check_point(psi, x, q.dimension(), t);
  return finite_or_throw(sphere_average(psi.evaluator, x, t, q));
}

double weighted_ball_mean(const ScalarField& psi, std::span<const double> x, double t, const BallRule& rule) {
  if (psi.dim.odd()) throw UsageError("weighted ball mean is used for even n only");
  check_point(psi, x, rule.dimension(), t);
  return finite_or_throw(weighted_ball_average(psi.evaluator, x, t, rule));
}

double weighted_ball_mean(const ScalarField& psi, std::span<const double> x, double t) {
  return weighted_ball_mean(psi, x, t, BallRule(psi.dim.n()));
}

}  // namespace wavecauchy

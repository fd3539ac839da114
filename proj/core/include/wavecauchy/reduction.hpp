#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "wavecauchy/errors.hpp"

namespace wavecauchy {

/// Gauss rule on (-R, R) for the weight (R^2 - s^2)^{(n-3)/2}.
///
/// This is the one-dimensional weight left over when a ball or sphere
/// integral of a function of x_n alone is reduced to a single variable.
/// The exponent may be a half-integer (even n); the rule is a scaled
/// Gauss-Gegenbauer rule, so it carries the endpoint behavior in its weights
/// and stays exact for polynomial f up to degree 2 * points - 1.
class GegenbauerRule {
 public:
  static constexpr int kDefaultPoints = 64;

  GegenbauerRule(int n, double R, int points = kDefaultPoints);

  /// Same rule for an arbitrary exponent, used by the descent route where the
  /// exponent is (n-2)/2.
  static GegenbauerRule with_exponent(double exponent, double R, int points = kDefaultPoints);

  double radius() const noexcept { return R_; }
  double exponent() const noexcept { return exponent_; }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  /// Exact value of the weight's integral, R^{2a+1} sqrt(pi) Gamma(a+1) / Gamma(a+3/2).
  double total_mass() const;

  /// Sum_i w_i f(s_i). f may return double or std::complex<double>.
  template <class F>
  auto integrate(F&& f) const {
    using Value = decltype(f(0.0));
    Value sum{};
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const Value v = f(nodes_[i]);
      if (!std::isfinite(std::abs(v))) {
        throw EvaluationError("integrand is not finite at s = " + std::to_string(nodes_[i]));
      }
      sum += weights_[i] * v;
    }
    return sum;
  }

 private:
  GegenbauerRule(double exponent, double R, int points, int);

  double R_;
  double exponent_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

struct ReductionOptions {
  int inner_points = GegenbauerRule::kDefaultPoints;
  int outer_points = 64;
};

/// Integral over B(0, R) in R^n of f(x_n), reduced to
///   omega_{n-1} int_0^R rho int_{-rho}^{rho} f(s) (rho^2 - s^2)^{(n-3)/2} ds drho.
/// Requires n >= 3 and R > 0.
double reduce_ball_integral(const std::function<double(double)>& f, double R, int n,
                            const ReductionOptions& options = {});

/// Integral over the sphere |x| = R in R^n of f(x_n), reduced to
///   omega_{n-1} R int_{-R}^{R} f(s) (R^2 - s^2)^{(n-3)/2} ds.
double reduce_sphere_integral(const std::function<double(double)>& f, double R, int n,
                              const ReductionOptions& options = {});

}  // namespace wavecauchy

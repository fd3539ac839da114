#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "wavecauchy/errors.hpp"

namespace wavecauchy {

/// Parameters of the numerical operator (1/t d/dt)^m.
///
/// Samples are taken at t + j h for |j| <= stencil_degree / 2, so the stencil
/// has stencil_degree + 1 points and the interpolant has degree
/// stencil_degree. The default degree 2m + 4 gives 2m + 5 points.
struct RadialDerivativeSpec {
  int m = 0;
  double h = 1e-2;
  int stencil_degree = 4;

  static RadialDerivativeSpec standard(int m, double h) { return {m, h, 2 * m + 4}; }

  int points() const noexcept { return stencil_degree + 1; }
  double half_width() const noexcept { return (stencil_degree / 2) * h; }

  /// m >= 0, h > 0, stencil_degree even and >= m + 2.
  void validate() const;

  /// validate() plus h < R / (2m + 6), which keeps the stencil well inside t > 0.
  void validate_for_radius(double R) const;
};

/// Radii t + j h at which iterated_radial_derivative samples its argument.
std::vector<double> stencil_radii(const RadialDerivativeSpec& spec, double t);

/// Linear weights c_j with (d/dt)^extra (1/t d/dt)^m F(t) ~= sum_j c_j F(t + j h).
///
/// The weights come from the degree-stencil_degree interpolant of the
/// samples: its Taylor coefficients at t are obtained with Fornberg's
/// recursion, then each application of (1/t d/dt) is carried out exactly on
/// the truncated power series in (tau - t), using 1/tau = sum (-u)^k / t^{k+1}.
/// Exact for polynomial F of degree <= stencil_degree, up to rounding.
std::vector<double> radial_derivative_weights(const RadialDerivativeSpec& spec, double t,
                                              int extra_derivatives = 0);

/// (d/dt)^extra (1/t d/dt)^m F at t from samples of F on the stencil.
/// F may return double or std::complex<double>.
template <class F>
auto iterated_radial_derivative(F&& f, const RadialDerivativeSpec& spec, double t,
                                int extra_derivatives = 0) {
  using Value = decltype(f(t));
  if (spec.m == 0 && extra_derivatives == 0) {
    spec.validate();
    if (!(t > 0.0)) throw StencilError("radius must be positive");
    const Value v = f(t);
    if (!std::isfinite(std::abs(v))) throw EvaluationError("non-finite sample at radius " + std::to_string(t));
    return v;
  }
  const auto weights = radial_derivative_weights(spec, t, extra_derivatives);
  const auto radii = stencil_radii(spec, t);
  Value sum{};
  for (std::size_t j = 0; j < radii.size(); ++j) {
    const Value v = f(radii[j]);
    if (!std::isfinite(std::abs(v))) {
      throw EvaluationError("non-finite sample at radius " + std::to_string(radii[j]));
    }
    sum += weights[j] * v;
  }
  return sum;
}

}  // namespace wavecauchy

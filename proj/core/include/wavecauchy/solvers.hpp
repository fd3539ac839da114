#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wavecauchy/averages.hpp"
#include "wavecauchy/fields.hpp"
#include "wavecauchy/radial_derivative.hpp"

namespace wavecauchy {

/// u_tt = Laplacian u on R^n, u(x,0) = phi, u_t(x,0) = psi.
struct CauchyProblem {
  CauchyProblem(ScalarField phi_, ScalarField psi_);

  ScalarField phi;
  ScalarField psi;
  Dimension dim;
};

enum class Method { spherical_means, weighted_means, dalembert, spectral };

std::string_view to_string(Method method);

struct SolutionSample {
  std::vector<double> x;
  double t = 0.0;
  double u = 0.0;
  Method method = Method::spherical_means;
  /// |u(h) - u(h/2)| for the means solvers, quadrature error estimate for d'Alembert.
  double error_estimate = 0.0;
};

/// Quadrature used by the means-based solvers. The angular rule serves the
/// spherical means; the full rule serves the weighted ball means.
struct SolverSettings {
  explicit SolverSettings(int n) : rule(n) {}
  explicit SolverSettings(BallRule rule_) : rule(std::move(rule_)) {}

  BallRule rule;
  bool estimate_error = true;
};

/// Stencil for the solution operators at time t: order m from the
/// dimension, default degree, h = min(t / (4m + 12), max_h).
RadialDerivativeSpec solver_stencil(Dimension dim, double t, double max_h = 0.05);

/// Odd n >= 3:
///   u = c_n d/dt (1/t d/dt)^m (t^{n-2} M_t phi) + c_n (1/t d/dt)^m (t^{n-2} M_t psi).
/// The phi term uses a stencil two degrees higher for its extra derivative.
/// t = 0 returns phi(x); 0 < t < 10 h throws StencilError.
SolutionSample solve_odd_point(const CauchyProblem& p, std::span<const double> x, double t,
                               const RadialDerivativeSpec& spec, const SolverSettings& settings);

/// Even n >= 2: the same operators acting on t^n times the weighted ball means.
SolutionSample solve_even_point(const CauchyProblem& p, std::span<const double> x, double t,
                                const RadialDerivativeSpec& spec, const SolverSettings& settings);

/// n = 1: (phi(x - t) + phi(x + t)) / 2 + (1/2) int_{x-t}^{x+t} psi.
SolutionSample solve_dalembert_point(const CauchyProblem& p, double x, double t);

/// Chooses the formula by dimension, with solver_stencil(dim, t, max_h).
SolutionSample solve_point(const CauchyProblem& p, std::span<const double> x, double t,
                           const SolverSettings& settings, double max_h = 0.05);

}  // namespace wavecauchy

#include "wavecauchy/solvers.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>

#include "wavecauchy/constants.hpp"

namespace wavecauchy {
namespace {

bool identically_zero(const ScalarField& f) { return f.support_radius && *f.support_radius == 0.0; }

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time must be non-negative, got " + std::to_string(t));
}

void check_point(const CauchyProblem& p, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(p.dim.n())) {
    throw UsageError("point has " + std::to_string(x.size()) + " components, problem is " +
                     std::to_string(p.dim.n()) + "-dimensional");
  }
}

enum class Core { sphere, weighted_ball };

// The mean core of a datum supported in B(0, a) is zero for tau < |x| - a,
// and for spheres also for tau > |x| + a. If t lies strictly inside such a
// range every derivative at t is zero, so the term is exactly 0. Skipping it
// also keeps the stencil from straddling the front.
bool core_vanishes_near(const ScalarField& f, std::span<const double> x, double t, Core core) {
  if (!f.support_radius) return false;
  double r = 0.0;
  for (double v : x) r += v * v;
  r = std::sqrt(r);
  const double a = *f.support_radius;
  return t < r - a || (core == Core::sphere && t > r + a);
}

SolutionSample solve_means(const CauchyProblem& p, std::span<const double> x, double t,
                           const RadialDerivativeSpec& spec, const SolverSettings& settings, Core core) {
  check_point(p, x);
  check_time(t);
  const int n = p.dim.n();
  if (settings.rule.dimension() != n) throw UsageError("solver quadrature dimension does not match the problem");
  const Method method = core == Core::sphere ? Method::spherical_means : Method::weighted_means;
  SolutionSample out{std::vector<double>(x.begin(), x.end()), t, 0.0, method, 0.0};
  if (t == 0.0) {
    out.u = p.phi(x);
    return out;
  }
  spec.validate();
  if (spec.m != p.dim.half_order()) {
    throw UsageError("stencil order m = " + std::to_string(spec.m) + " does not match n = " + std::to_string(n));
  }
  if (t < 10.0 * spec.h) {
    throw StencilError("time too small for the stencil: t = " + std::to_string(t) + " < 10 h = " +
                       std::to_string(10.0 * spec.h));
  }

  const double constant = core == Core::sphere ? odd_constant(n) : even_constant(n);
  const double v_n = unit_ball_volume(n);
  const auto G = [&](const ScalarField& f) {
    return [&, core, field = &f](double tau) {
      const auto& g = field->evaluator;
      double v = core == Core::sphere ? std::pow(tau, n - 2) * sphere_average(g, x, tau, settings.rule.angular())
                                      : weighted_ball_integral(g, x, tau, settings.rule) / v_n;
      if (!std::isfinite(v)) throw EvaluationError("initial data produced a non-finite mean");
      return v;
    };
  };
  const bool with_phi = !identically_zero(p.phi) && !core_vanishes_near(p.phi, x, t, core);
  const bool with_psi = !identically_zero(p.psi) && !core_vanishes_near(p.psi, x, t, core);

  const auto evaluate = [&](double h) {
    double u = 0.0;
    if (with_phi) {
      const RadialDerivativeSpec phi_spec{spec.m, h, spec.stencil_degree + 2};
      u += iterated_radial_derivative(G(p.phi), phi_spec, t, 1);
    }
    if (with_psi) {
      const RadialDerivativeSpec psi_spec{spec.m, h, spec.stencil_degree};
      u += iterated_radial_derivative(G(p.psi), psi_spec, t);
    }
    return constant * u;
  };

  out.u = evaluate(spec.h);
  if (settings.estimate_error) out.error_estimate = std::abs(out.u - evaluate(0.5 * spec.h));
  return out;
}

}  // namespace

CauchyProblem::CauchyProblem(ScalarField phi_, ScalarField psi_)
    : phi(std::move(phi_)), psi(std::move(psi_)), dim(phi.dim) {
  if (phi.dim != psi.dim) throw UsageError("phi and psi must have the same dimension");
  if (!phi.evaluator || !psi.evaluator) throw UsageError("initial data needs an evaluator");
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::spherical_means: return "spherical_means";
    case Method::weighted_means: return "weighted_means";
    case Method::dalembert: return "dalembert";
    case Method::spectral: return "spectral";
  }
  return "unknown";
}

RadialDerivativeSpec solver_stencil(Dimension dim, double t, double max_h) {
  const int m = dim.half_order();
  if (!(t > 0.0)) throw DomainError("solver stencil needs t > 0");
  return RadialDerivativeSpec::standard(m, std::min(t / (4.0 * m + 12.0), max_h));
}

SolutionSample solve_odd_point(const CauchyProblem& p, std::span<const double> x, double t,
                               const RadialDerivativeSpec& spec, const SolverSettings& settings) {
  if (!p.dim.odd() || p.dim.n() < 3) {
    throw UsageError("spherical-means formula needs odd n >= 3, got " + std::to_string(p.dim.n()));
  }
  return solve_means(p, x, t, spec, settings, Core::sphere);
}

SolutionSample solve_even_point(const CauchyProblem& p, std::span<const double> x, double t,
                                const RadialDerivativeSpec& spec, const SolverSettings& settings) {
  if (!p.dim.even()) throw UsageError("weighted-means formula needs even n, got " + std::to_string(p.dim.n()));
  return solve_means(p, x, t, spec, settings, Core::weighted_ball);
}

SolutionSample solve_dalembert_point(const CauchyProblem& p, double x, double t) {
  if (p.dim.n() != 1) throw UsageError("d'Alembert formula needs n = 1, got " + std::to_string(p.dim.n()));
  check_time(t);
  SolutionSample out{{x}, t, 0.0, Method::dalembert, 0.0};
  const auto at = [](const ScalarField& f, double s) { return f(std::span<const double>(&s, 1)); };
  if (t == 0.0) {
    out.u = at(p.phi, x);
    return out;
  }
  double integral = 0.0;
  if (!identically_zero(p.psi)) {
    double error = 0.0;
    integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [&](double s) { return at(p.psi, s); }, x - t, x + t, 15, 1e-14, &error);
    out.error_estimate = 0.5 * error;
  }
  out.u = 0.5 * (at(p.phi, x - t) + at(p.phi, x + t)) + 0.5 * integral;
  if (!std::isfinite(out.u)) throw EvaluationError("d'Alembert formula produced a non-finite value");
  return out;
}

SolutionSample solve_point(const CauchyProblem& p, std::span<const double> x, double t,
                           const SolverSettings& settings, double max_h) {
  if (p.dim.n() == 1) {
    check_point(p, x);
    return solve_dalembert_point(p, x[0], t);
  }
  if (t == 0.0) {
    check_point(p, x);
    return {std::vector<double>(x.begin(), x.end()), 0.0, p.phi(x),
            p.dim.odd() ? Method::spherical_means : Method::weighted_means, 0.0};
  }
  const auto spec = solver_stencil(p.dim, t, max_h);
  return p.dim.odd() ? solve_odd_point(p, x, t, spec, settings) : solve_even_point(p, x, t, spec, settings);
}

}  // namespace wavecauchy

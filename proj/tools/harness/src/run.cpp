#include "wavecauchy/harness/run.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>

#include "wavecauchy/constants.hpp"
#include "wavecauchy/convergence.hpp"
#include "wavecauchy/grid_io.hpp"
#include "wavecauchy/kernel.hpp"
#include "wavecauchy/monte_carlo.hpp"
#include "wavecauchy/reduction.hpp"
#include "wavecauchy/solvers.hpp"
#include "wavecauchy/spectral.hpp"
#include "wavecauchy/version.hpp"
#include "wavecauchy/wave_residual.hpp"

namespace wavecauchy::harness {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string str(double v) { return format_real(v); }
std::string str(int v) { return std::to_string(v); }
std::string str(std::size_t v) { return std::to_string(v); }

double tol(const RunConfig& cfg, double configured) { return cfg.tol_override.value_or(configured); }

Provenance provenance(const RunConfig& cfg) {
  return {std::string(to_string(cfg.command)), cfg.hash, cfg.seed, kVersion};
}

SphereQuadrature sphere_rule(const RunConfig& cfg, int n) {
  const auto& q = cfg.quadrature;
  if (!q.latitude && !q.azimuth && !q.nodes) return SphereQuadrature::with_defaults(n);
  const int lat = q.latitude.value_or(q.nodes.value_or(SphereQuadrature::default_latitude_nodes(n)));
  const int az = q.azimuth.value_or(q.nodes ? 2 * *q.nodes : SphereQuadrature::default_azimuth_nodes(n));
  return SphereQuadrature(n, lat, az);
}

BallRule ball_rule(const RunConfig& cfg, int n) {
  const auto& q = cfg.quadrature;
  if (!q.latitude && !q.azimuth && !q.nodes && !q.radial) return BallRule(n);
  const bool angular = q.latitude || q.azimuth || q.nodes;
  return BallRule(angular ? sphere_rule(cfg, n) : BallRule::default_angular(n),
                  q.radial.value_or(BallRule::default_radial_nodes(n)));
}

// ---------------------------------------------------------------- solve

std::vector<std::vector<double>> probe_set(const RunConfig& cfg, const PeriodicGrid* snap) {
  const int n = cfg.dim;
  auto probes = cfg.solve.probes;
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unit;
  for (int i = 0; i < cfg.solve.random_probes; ++i) {
    // Uniform in the ball: Gaussian direction, radius r U^{1/n}.
    std::vector<double> x(n);
    double norm = 0.0;
    for (double& v : x) {
      v = gauss(rng);
      norm += v * v;
    }
    norm = std::sqrt(norm);
    const double r = cfg.solve.probe_radius * std::pow(unit(rng), 1.0 / n);
    for (double& v : x) {
      v *= norm > 0.0 ? r / norm : 0.0;
      if (snap) v = std::round(v / snap->spacing()) * snap->spacing();
    }
    probes.push_back(std::move(x));
  }
  return probes;
}

Report run_solve(const RunConfig& cfg) {
  const int n = cfg.dim;
  const CauchyProblem problem(cfg.phi.build(n), cfg.psi.build(n));
  std::vector<std::string> columns{"case"};
  for (int k = 1; k <= n; ++k) columns.push_back("x" + std::to_string(k));
  for (const char* c : {"t", "u", "method", "error_estimate", "oracle"}) columns.emplace_back(c);
  Report report(columns, provenance(cfg));

  const double tolerance = tol(cfg, cfg.solve.tolerance);
  std::optional<PeriodicGrid> grid;
  std::optional<SpectralState> state;
  if (cfg.solve.oracle == "spectral") {
    grid = PeriodicGrid{n, cfg.solve.spectral_points, cfg.solve.spectral_half_width};
    state = SpectralState::from_problem(problem, *grid);
  }
  const auto probes = probe_set(cfg, grid ? &*grid : nullptr);
  if (grid) {
    for (const auto& p : probes) {
      try {
        grid->index_of(p);
      } catch (const UsageError& e) {
        throw ConfigError(std::string("spectral oracle needs probes on grid nodes: ") + e.what(), {"probes"});
      }
    }
  }

  SolverSettings settings = n >= 2 ? SolverSettings(ball_rule(cfg, n)) : SolverSettings(2);
  std::size_t index = 0;
  for (double t : cfg.solve.times) {
    std::optional<SolutionGrid> reference;
    double peak = 0.0;
    if (state) {
      reference = state->solution(t);
      for (double v : reference->values) peak = std::max(peak, std::abs(v));
      if (cfg.solve.grid_out && t == cfg.solve.times.back()) {
        std::ofstream out(*cfg.solve.grid_out, std::ios::binary);
        if (!out) throw ConfigError("cannot write " + cfg.solve.grid_out->string(), {"solve.grid_out"});
        write_grid_binary(out, *reference);
      }
    }
    for (const auto& x : probes) {
      const auto s = solve_point(problem, x, t, settings, cfg.quadrature.max_h);
      std::vector<std::string> cells{str(index++)};
      for (double c : s.x) cells.push_back(str(c));
      cells.push_back(str(s.t));
      cells.push_back(str(s.u));
      cells.emplace_back(to_string(s.method));
      cells.push_back(str(s.error_estimate));
      if (cfg.solve.oracle == "harmonic") {
        const double exact = problem.phi(x) + t * problem.psi(x);
        cells.push_back(str(exact));
        report.add_checked(cells, std::abs(s.u - exact) / std::max(1.0, std::abs(exact)), tolerance,
                           "harmonic exactness u = phi + t psi (relative)");
      } else if (reference) {
        const double exact = reference->at(x);
        cells.push_back(str(exact));
        report.add_checked(cells, std::abs(s.u - exact) / std::max(peak, 1e-300), tolerance,
                           "spectral oracle agreement (relative to grid peak)");
      } else {
        cells.emplace_back();
        report.add_checked(cells, std::isfinite(s.u) ? s.error_estimate : kInf, tolerance,
                           "error estimate |u(h) - u(h/2)|");
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------- identities

Report run_identities(const RunConfig& cfg) {
  const auto& spec = cfg.identities;
  Report report({"n", "R", "|xi|", "residual_real", "residual_imag", "h", "nodes", "route_difference",
                 "stencil_flag"},
                provenance(cfg));
  KernelOptions options;
  if (cfg.quadrature.nodes) options.base_nodes = *cfg.quadrature.nodes;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> radius(spec.r_min, spec.r_max);
  std::uniform_real_distribution<double> unit;
  std::normal_distribution<double> gauss;

  for (int n : spec.dims) {
    const double tolerance = tol(cfg, n == 3 ? spec.tol_n3 : n % 2 ? spec.tol_odd : spec.tol_even);
    const double route_tol = tol(cfg, spec.tol_route);
    for (int c = 0; c < spec.cases; ++c) {
      const double R = radius(rng);
      // Case 0 of each dimension is the zero frequency.
      const double rho = c == 0 ? 0.0 : unit(rng) * spec.max_rxi / R;
      std::vector<double> xi(n);
      double norm = 0.0;
      for (double& v : xi) {
        v = gauss(rng);
        norm += v * v;
      }
      for (double& v : xi) v *= rho / std::sqrt(norm);
      const KernelQuery q(xi, R);
      const auto stencil = identity_stencil(q);
      const auto r = n % 2 ? verify_odd_identity(q, stencil, options)
                           : verify_even_identity(q, stencil, BallRoute::descent, options);
      double route = 0.0;
      if (n % 2 == 0) {
        const auto zero = ball_weighted_exponential_average(KernelQuery(std::vector<double>(n, 0.0), R));
        route = std::abs(ball_weighted_exponential_average(q, BallRoute::descent, options) -
                         ball_weighted_exponential_average(q, BallRoute::direct, options)) /
                std::abs(zero);
      }
      const bool flagged = r.h < 1e-6 * R;
      const bool pass = r.residual_real <= tolerance && route <= route_tol;
      std::string check = r.residual_real > tolerance
                              ? "identity residual " + str(r.residual_real) + " > tolerance " + str(tolerance)
                              : "descent vs direct " + str(route) + " > tolerance " + str(route_tol);
      report.add_row({str(n), str(R), str(q.xi_norm()), str(r.residual_real), str(r.residual_imag), str(r.h),
                      str(r.nodes), n % 2 ? "" : str(route), flagged ? "h<1e-6R" : ""},
                     r.residual_real, tolerance, pass, check);
    }
  }
  return report;
}

// ---------------------------------------------------------------- reduction

// Closed forms for f(x_n) over the ball and the sphere of radius R in R^n.
// For cos the sphere integral is K R^{nu+1} J_nu(R), nu = (n-2)/2, and the
// ball integral K R^{nu+1} J_{nu+1}(R), with K = omega_{n-1} sqrt(pi) Gamma((n-1)/2) 2^nu.
double closed_form(const std::string& f, bool ball, int n, double R) {
  const double omega = unit_sphere_area(n);
  if (f == "1") return ball ? unit_ball_volume(n) * std::pow(R, n) : omega * std::pow(R, n - 1);
  if (f == "s2") {
    return ball ? omega * std::pow(R, n + 2) / (n * (n + 2.0)) : omega * std::pow(R, n + 1) / n;
  }
  const double nu = 0.5 * (n - 2);
  const double K = unit_sphere_area(n - 1) * std::sqrt(std::numbers::pi) * std::tgamma(0.5 * (n - 1)) *
                   std::pow(2.0, nu);
  return K * std::pow(R, nu + 1) * std::cyl_bessel_j(ball ? nu + 1 : nu, R);
}

double (*function_of(const std::string& f))(double) {
  if (f == "1") return [](double) { return 1.0; };
  if (f == "s2") return [](double s) { return s * s; };
  return [](double s) { return std::cos(s); };
}

Report run_reduction(const RunConfig& cfg) {
  const auto& spec = cfg.reduction;
  Report report({"n", "R", "f", "domain", "quadrature", "closed_form", "relative_error", "mc_value", "mc_sigma",
                 "mc_distance_sigmas"},
                provenance(cfg));
  ReductionOptions options;
  if (cfg.quadrature.nodes) options.inner_points = options.outer_points = *cfg.quadrature.nodes;
  const double tolerance = tol(cfg, spec.tolerance);
  std::uint64_t stream = 0;
  for (int n : spec.dims) {
    for (double R : spec.radii) {
      for (const auto& name : spec.functions) {
        const auto f = function_of(name);
        const PointFunction g = [f, n](std::span<const double> x) { return f(x[n - 1]); };
        for (const bool ball : {true, false}) {
          const double quad = ball ? reduce_ball_integral(f, R, n, options) : reduce_sphere_integral(f, R, n, options);
          const double exact = closed_form(name, ball, n, R);
          const double rel = std::abs(quad - exact) / std::abs(exact);
          const std::uint64_t seed = cfg.seed + 0x9e3779b97f4a7c15ULL * ++stream;
          const auto mc = ball ? monte_carlo_ball(g, n, R, spec.mc_samples, seed)
                               : monte_carlo_sphere(g, n, R, spec.mc_samples, seed);
          const double distance = mc.sigma > 0.0 ? std::abs(mc.value - exact) / mc.sigma : 0.0;
          const bool mc_ok = mc.within(exact, spec.mc_sigmas);
          const bool pass = rel <= tolerance && mc_ok;
          const std::string check = rel > tolerance
                                        ? "quadrature vs closed form " + str(rel) + " > tolerance " + str(tolerance)
                                        : "Monte Carlo outside " + str(spec.mc_sigmas) + " sigma";
          report.add_row({str(n), str(R), name, ball ? "ball" : "sphere", str(quad), str(exact), str(rel),
                          str(mc.value), str(mc.sigma), str(distance)},
                         rel, tolerance, pass, check);
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------- constants

Report run_constants(const RunConfig& cfg) {
  Report report({"n", "kind", "omega_n", "v_n", "product", "alternative", "zero_frequency"}, provenance(cfg));
  const double tolerance = tol(cfg, cfg.constants.tolerance);
  for (int n : cfg.constants.dims) {
    const bool odd = n % 2 == 1;
    const double product = odd ? odd_constant(n) : even_constant(n);
    const double alternative = odd ? odd_constant_from_areas(n) : even_constant_from_descent(n);
    const double zero = identity_constant_at_zero_frequency(n);
    const double residual =
        std::max(std::abs(alternative - product), std::abs(zero - product)) / std::abs(product);
    report.add_checked({str(n), odd ? "c_n" : "d_n", str(unit_sphere_area(n)), str(unit_ball_volume(n)),
                        str(product), str(alternative), str(zero)},
                       residual, tolerance, "three routes to the constant disagree");
  }
  return report;
}

}  // namespace

// ---------------------------------------------------------------- converge

Report converge(const RunConfig& cfg) {
  cfg.validate();
  const auto& cv = cfg.converge;
  if (cv.levels.size() < 3) throw UsageError("convergence ladder needs at least 3 levels");
  const int n = cfg.dim;
  Report report({"level", "h", "value", "pairwise_order", "observed_order", "saturated", "monotone"},
                provenance(cfg));

  std::function<double(double)> level_residual;
  std::vector<double> center = cv.center.empty() ? std::vector<double>(n, 0.0) : cv.center;
  std::optional<CauchyProblem> problem;
  std::optional<SolverSettings> settings;
  if (cv.target == "analytic") {
    std::function<double(std::span<const double>, double)> u;
    if (cv.analytic == "cos_cos") {
      u = [](std::span<const double> x, double t) { return std::cos(x[0]) * std::cos(t); };
      if (n != 1) throw ConfigError("analytic cos_cos is the n = 1 solution cos(x)cos(t)", {"run.dim"});
    } else if (cv.analytic == "linear") {
      u = [](std::span<const double> x, double t) { return t * x[0]; };
    } else {
      u = [n](std::span<const double> x, double t) {
        double s = 0.0;
        for (double v : x) s += v * v;
        return s / n + t * t;
      };
    }
    level_residual = [u, center, cv](double h) {
      return wave_residual(centred_slab(u, center, cv.t, 3, 3, h, 0.5 * h));
    };
  } else if (cv.target == "solution") {
    problem.emplace(cfg.phi.build(n), cfg.psi.build(n));
    settings.emplace(n >= 2 ? SolverSettings(ball_rule(cfg, n)) : SolverSettings(2));
    settings->estimate_error = false;
    const double max_h = cfg.quadrature.max_h;
    level_residual = [&, max_h](double h) {
      const auto u = [&](std::span<const double> x, double t) { return solve_point(*problem, x, t, *settings, max_h).u; };
      return wave_residual(centred_slab(u, center, cv.t, 3, 3, h, 0.5 * h));
    };
  } else {
    std::vector<double> xi = cv.xi;
    if (xi.empty()) {
      xi.assign(n, 0.0);
      xi[0] = 2.0;
    }
    const KernelQuery q(xi, cv.radius);
    KernelOptions options;
    if (cfg.quadrature.nodes) options.base_nodes = *cfg.quadrature.nodes;
    level_residual = [q, options](double h) {
      const auto spec = RadialDerivativeSpec::standard(q.dim().half_order(), h);
      const auto r = q.dim().odd() ? verify_odd_identity(q, spec, options)
                                   : verify_even_identity(q, spec, BallRoute::descent, options);
      return r.residual_real;
    };
  }

  // Slabs use time step h/2: with equal steps the central differences of a
  // single plane wave cancel exactly and the ladder would show no order.
  std::vector<double> residuals;
  for (double h : cv.levels) residuals.push_back(level_residual(h));
  const auto fit = observed_order(cv.levels, residuals, tol(cfg, cv.floor));
  for (std::size_t i = 0; i < cv.levels.size(); ++i) {
    const std::string pairwise = i > 0 ? str(fit.pairwise[i - 1]) : "";
    report.add_row({str(i), str(cv.levels[i]), str(residuals[i]), pairwise, "", "", ""}, residuals[i], kInf,
                   std::isfinite(residuals[i]), "non-finite residual");
  }

  // The fit row: its residual is the distance of the order from the accepted band.
  double outside = 0.0;
  std::string check;
  if (cv.min_order && !(fit.order >= *cv.min_order)) {
    outside = std::isnan(fit.order) ? kInf : *cv.min_order - fit.order;
    check = "observed order " + str(fit.order) + " below " + str(*cv.min_order);
  }
  if (cv.max_order && !(fit.order <= *cv.max_order)) {
    outside = std::isnan(fit.order) ? kInf : fit.order - *cv.max_order;
    check = "observed order " + str(fit.order) + " above " + str(*cv.max_order);
  }
  bool pass = outside <= 0.0;
  if (cv.require_decreasing && !fit.monotone) {
    pass = false;
    check = "residuals do not strictly decrease";
  }
  if (cv.expect_saturated && !fit.saturated) {
    pass = false;
    check = "expected residuals at the rounding floor " + str(tol(cfg, cv.floor));
  }
  report.add_row({"fit", "", "", "", str(fit.order), fit.saturated ? "true" : "false", fit.monotone ? "true" : "false"},
                 outside, 0.0, pass, check);
  return report;
}

Report run(const RunConfig& cfg) {
  cfg.validate();
  switch (cfg.command) {
    case Command::solve: return run_solve(cfg);
    case Command::verify_identities: return run_identities(cfg);
    case Command::verify_reduction: return run_reduction(cfg);
    case Command::constants: return run_constants(cfg);
    case Command::converge: return converge(cfg);
  }
  throw UsageError("unknown command");
}

std::string csv_columns_help() {
  return R"(CSV columns (every table ends with residual,tolerance,status,note):
  solve              case,x1..xn,t,u,method,error_estimate,oracle
  verify-identities  n,R,|xi|,residual_real,residual_imag,h,nodes,route_difference,stencil_flag
  verify-reduction   n,R,f,domain,quadrature,closed_form,relative_error,mc_value,mc_sigma,mc_distance_sigmas
  constants          n,kind,omega_n,v_n,product,alternative,zero_frequency
  converge           level,h,value,pairwise_order,observed_order,saturated,monotone
Lines starting with '#' carry provenance (command, config hash, seed, version) and the summary.)";
}

}  // namespace wavecauchy::harness

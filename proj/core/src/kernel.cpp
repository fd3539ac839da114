#include "wavecauchy/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wavecauchy/constants.hpp"
#include "wavecauchy/gauss.hpp"
#include "wavecauchy/reduction.hpp"
#include "wavecauchy/sphere_quadrature.hpp"

namespace wavecauchy {
namespace {

using cplx = std::complex<double>;

// (omega_{n-1}/omega_n) int_{-R}^{R} exp(i s rho) (R^2 - s^2)^{(n-3)/2} ds, odd n up to kMax + 1.
cplx sphere_average_radial(int n, double rho, double R, int nodes) {
  const auto rule = GegenbauerRule::with_exponent(0.5 * (n - 3), R, nodes);
  const double ratio = detail::unit_sphere_area_unchecked(n - 1) / detail::unit_sphere_area_unchecked(n);
  // Imaginary parts cancel pairwise on the symmetric rule; keep them as the
  // parity diagnostic rather than dropping them.
  return ratio * rule.integrate([rho](double s) { return std::polar(1.0, s * rho); });
}

cplx ball_average_descent(int n, double rho, double R, int nodes) {
  const double omega_next = detail::unit_sphere_area_unchecked(n + 1);
  // Each hemisphere of the (n+1)-sphere projects onto B(0,R) with
  // dsigma = R (R^2 - |x|^2)^{-1/2} dx; the (n+1)-sphere average carries 1/(omega_{n+1} R).
  return omega_next / (2.0 * unit_ball_volume(n)) * sphere_average_radial(n + 1, rho, R, nodes);
}

cplx ball_average_direct(const KernelQuery& q, int nodes) {
  const int n = q.dim().n();
  const double R = q.radius();
  const double rho = q.xi_norm();
  const auto radial = gauss_legendre_on(nodes, 0.0, 0.5 * std::numbers::pi);

  // Angular factor A(r) = integral over the unit sphere of exp(-i r w.xi).
  std::function<cplx(double)> angular;
  SphereQuadrature circle(2, 0, n == 2 ? std::max(64, 2 * nodes) : 1);
  std::shared_ptr<const QuadratureRule> gegenbauer;
  if (n == 2) {
    angular = [&](double r) {
      cplx sum{};
      for (std::size_t i = 0; i < circle.size(); ++i) {
        const auto w = circle.node(i);
        sum += circle.weights()[i] * std::polar(1.0, -r * (w[0] * q.xi()[0] + w[1] * q.xi()[1]));
      }
      return sum;
    };
  } else {
    gegenbauer = gauss_gegenbauer(nodes, 0.5 * (n - 3));
    const double omega_lower = unit_sphere_area(n - 1);
    angular = [&, omega_lower](double r) {
      cplx sum{};
      for (std::size_t i = 0; i < gegenbauer->size(); ++i) {
        sum += gegenbauer->weights[i] * std::polar(1.0, r * rho * gegenbauer->nodes[i]);
      }
      return omega_lower * sum;
    };
  }

  cplx total{};
  for (std::size_t j = 0; j < radial.size(); ++j) {
    const double r = R * std::sin(radial.nodes[j]);
    total += radial.weights[j] * std::pow(r, n - 1) * angular(r);
  }
  return total / unit_ball_volume(n);
}

void require_parity(const KernelQuery& q, Parity parity, const char* what) {
  if (q.dim().parity() != parity) {
    throw UsageError(std::string(what) + " is not defined for n = " + std::to_string(q.dim().n()));
  }
}

void require_order(const RadialDerivativeSpec& spec, int m) {
  if (spec.m != m) {
    throw UsageError("stencil order m = " + std::to_string(spec.m) + " does not match dimension order " +
                     std::to_string(m));
  }
}

}  // namespace

KernelQuery::KernelQuery(std::vector<double> xi, double R)
    : xi_(std::move(xi)), R_(R), dim_(static_cast<int>(xi_.size())), xi_norm_(0.0) {
  if (dim_.n() < 2) throw DomainError("kernel queries need n >= 2");
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("kernel radius must be positive and finite");
  double s = 0.0;
  for (double v : xi_) s += v * v;
  xi_norm_ = std::sqrt(s);
}

double sinc_kernel_radial(double rho, double R) {
  if (!(R > 0.0)) throw DomainError("sinc kernel needs R > 0");
  rho = std::abs(rho);
  const double x = R * rho;
  if (x < 1e-4) {
    const double x2 = x * x;
    return R * (1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0)));
  }
  return std::sin(x) / rho;
}

int oscillatory_nodes(double R_rho, const KernelOptions& options) {
  if (R_rho <= 30.0) return options.base_nodes;
  const double periods = R_rho / std::numbers::pi;
  return std::max(options.base_nodes, static_cast<int>(std::ceil(options.nodes_per_period * periods)));
}

std::complex<double> sphere_exponential_average(const KernelQuery& q, const KernelOptions& options) {
  require_parity(q, Parity::odd, "sphere_exponential_average (use ball_weighted_exponential_average)");
  const int nodes = oscillatory_nodes(q.radius() * q.xi_norm(), options);
  return sphere_average_radial(q.dim().n(), q.xi_norm(), q.radius(), nodes);
}

std::complex<double> ball_weighted_exponential_average(const KernelQuery& q, BallRoute route,
                                                       const KernelOptions& options) {
  require_parity(q, Parity::even, "ball_weighted_exponential_average (use sphere_exponential_average)");
  const int nodes = oscillatory_nodes(q.radius() * q.xi_norm(), options);
  if (route == BallRoute::descent) return ball_average_descent(q.dim().n(), q.xi_norm(), q.radius(), nodes);
  return ball_average_direct(q, nodes);
}

RadialDerivativeSpec identity_stencil(const KernelQuery& q) {
  const int m = q.dim().half_order();
  const double R = q.radius();
  const double rho = q.xi_norm();
  // h |xi| = 0.05 keeps the degree 2m+4 truncation error near 1e-10 over R|xi| <= 20.
  double h = 0.25 * R / (2.0 * m + 6.0);
  if (rho > 0.0) h = std::min(h, 0.05 / rho);
  return RadialDerivativeSpec::standard(m, h);
}

IdentityResidual verify_odd_identity(const KernelQuery& q, const RadialDerivativeSpec& spec,
                                     const KernelOptions& options) {
  require_parity(q, Parity::odd, "odd identity");
  const int n = q.dim().n();
  if (n < 3) throw UsageError("odd identity needs n >= 3");
  require_order(spec, q.dim().half_order());
  if (spec.m > 0) spec.validate_for_radius(q.radius());

  const double rho = q.xi_norm();
  // One node count for the whole stencil keeps R -> average smooth.
  const int nodes = oscillatory_nodes((q.radius() + spec.half_width()) * rho, options);
  const auto average = [&](double r) { return sphere_average_radial(n, rho, r, nodes); };

  IdentityResidual out;
  out.lhs = sinc_kernel_radial(rho, q.radius());
  out.rhs = odd_constant(n) * iterated_radial_derivative(average, spec, q.radius());
  out.residual_real = std::abs(out.lhs - out.rhs.real());
  out.residual_imag = std::abs(out.rhs.imag());
  out.h = spec.h;
  out.nodes = nodes;
  return out;
}

IdentityResidual verify_even_identity(const KernelQuery& q, const RadialDerivativeSpec& spec,
                                      BallRoute route, const KernelOptions& options) {
  require_parity(q, Parity::even, "even identity");
  const int n = q.dim().n();
  require_order(spec, q.dim().half_order());
  if (spec.m > 0) spec.validate_for_radius(q.radius());

  const double rho = q.xi_norm();
  const int nodes = oscillatory_nodes((q.radius() + spec.half_width()) * rho, options);
  const auto average = [&](double r) -> cplx {
    if (route == BallRoute::descent) return ball_average_descent(n, rho, r, nodes);
    return ball_average_direct(q.with_radius(r), nodes);
  };

  IdentityResidual out;
  out.lhs = sinc_kernel_radial(rho, q.radius());
  out.rhs = even_constant(n) * iterated_radial_derivative(average, spec, q.radius());
  out.residual_real = std::abs(out.lhs - out.rhs.real());
  out.residual_imag = std::abs(out.rhs.imag());
  out.h = spec.h;
  out.nodes = nodes;
  return out;
}

IdentityResidual verify_identity(const KernelQuery& q, const KernelOptions& options) {
  const auto spec = identity_stencil(q);
  if (q.dim().odd()) return verify_odd_identity(q, spec, options);
  return verify_even_identity(q, spec, BallRoute::descent, options);
}

double identity_constant_at_zero_frequency(int n, double R) {
  const KernelQuery q(std::vector<double>(static_cast<std::size_t>(n), 0.0), R);
  const auto spec = identity_stencil(q);
  const auto average = [&](double r) {
    const auto at = q.with_radius(r);
    return q.dim().odd() ? sphere_exponential_average(at) : ball_weighted_exponential_average(at);
  };
  if (q.dim().odd() && n < 3) throw UsageError("odd identity needs n >= 3");
  return R / iterated_radial_derivative(average, spec, R).real();
}

}  // namespace wavecauchy

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "wavecauchy/dimension.hpp"
#include "wavecauchy/radial_derivative.hpp"

namespace wavecauchy {

/// A frequency xi in R^n together with a radius R > 0; n = xi.size() >= 2.
class KernelQuery {
 public:
  KernelQuery(std::vector<double> xi, double R);

  const std::vector<double>& xi() const noexcept { return xi_; }
  double radius() const noexcept { return R_; }
  Dimension dim() const noexcept { return dim_; }
  double xi_norm() const noexcept { return xi_norm_; }

  /// Same frequency, different radius.
  KernelQuery with_radius(double R) const { return KernelQuery(xi_, R); }

 private:
  std::vector<double> xi_;
  double R_;
  Dimension dim_;
  double xi_norm_;
};

/// sin(R rho) / rho with the removable singularity filled in (value R at rho = 0).
/// Below R rho = 1e-4 a Taylor series through order 7 is used.
double sinc_kernel_radial(double rho, double R);

inline double sinc_kernel(std::span<const double> xi, double R) {
  double s = 0.0;
  for (double v : xi) s += v * v;
  return sinc_kernel_radial(std::sqrt(s), R);
}

struct KernelOptions {
  /// Gauss nodes for the one-dimensional oscillatory integrals while R|xi| <= 30.
  int base_nodes = 64;
  /// Nodes per oscillation period beyond that.
  double nodes_per_period = 10.0;
};

/// Node count for an oscillatory integral over (-R, R) with frequency rho.
int oscillatory_nodes(double R_rho, const KernelOptions& options = {});

/// (1 / (omega_n R)) * integral over |x| = R of exp(-i x.xi) dsigma, for odd n >= 3.
///
/// By rotation invariance this is (omega_{n-1} / omega_n) times
/// int_{-R}^{R} exp(i s|xi|) (R^2 - s^2)^{(n-3)/2} ds. Its value at xi = 0 is R^{n-2}.
std::complex<double> sphere_exponential_average(const KernelQuery& q, const KernelOptions& options = {});

enum class BallRoute {
  /// (n+1)-sphere average of the odd case, folded onto R^n through both hemispheres.
  descent,
  /// Radial-angular quadrature in R^n with r = R sin(theta).
  direct,
};

/// (1 / v_n) * integral over |x| < R of (R^2 - |x|^2)^{-1/2} exp(-i x.xi) dx, for even n >= 2.
std::complex<double> ball_weighted_exponential_average(const KernelQuery& q,
                                                       BallRoute route = BallRoute::descent,
                                                       const KernelOptions& options = {});

struct IdentityResidual {
  double residual_real = 0.0;  // |sin(R|xi|)/|xi| - Re(rhs)|
  double residual_imag = 0.0;  // |Im(rhs)|
  double lhs = 0.0;
  std::complex<double> rhs;
  double h = 0.0;
  int nodes = 0;
};

/// Stencil used by the identity checks when the caller does not pick one.
/// Resolves the oscillation of the averages (h |xi| small) while keeping h
/// large enough that m-fold differentiation does not amplify rounding.
RadialDerivativeSpec identity_stencil(const KernelQuery& q);

/// Residual of sin(R|xi|)/|xi| = c_n (1/R d/dR)^m [sphere_exponential_average], odd n >= 3.
IdentityResidual verify_odd_identity(const KernelQuery& q, const RadialDerivativeSpec& spec,
                                     const KernelOptions& options = {});

/// Residual of sin(R|xi|)/|xi| = d_n (1/R d/dR)^{m'} [ball_weighted_exponential_average], even n >= 2.
IdentityResidual verify_even_identity(const KernelQuery& q, const RadialDerivativeSpec& spec,
                                      BallRoute route = BallRoute::descent,
                                      const KernelOptions& options = {});

/// Dispatches on parity with identity_stencil().
IdentityResidual verify_identity(const KernelQuery& q, const KernelOptions& options = {});

/// At xi = 0 both sides of the identity equal R, so the constant (c_n for odd
/// n, d_n for even n) is R divided by the numerically differentiated average.
double identity_constant_at_zero_frequency(int n, double R = 1.0);

}  // namespace wavecauchy

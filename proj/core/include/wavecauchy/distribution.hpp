#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>

#include "wavecauchy/averages.hpp"
#include "wavecauchy/dimension.hpp"
#include "wavecauchy/radial_derivative.hpp"

namespace wavecauchy {

using ComplexPointFunction = std::function<std::complex<double>(std::span<const double>)>;
using RealPointFunction = std::function<double(std::span<const double>)>;

/// The compactly supported distribution T_R whose Fourier transform is
/// sin(R|xi|)/|xi|, represented only through its action on test functions.
///
///   odd n:  T_R(phi) = c_n (1/R d/dR)^m  [ (1/(omega_n R)) int_{|x|=R} phi dsigma ]
///   even n: T_R(phi) = d_n (1/R d/dR)^m' [ (1/v_n) int_{|x|<R} (R^2-|x|^2)^{-1/2} phi dx ]
class DistributionFunctional {
 public:
  struct Options {
    /// Stencil spacing for the radial derivative; default R / (4m + 12).
    std::optional<double> h;
    /// Angular rule; defaults to SphereQuadrature::with_defaults(n).
    std::optional<SphereQuadrature> sphere;
    int radial_nodes = BallRule::kDefaultRadialNodes;
  };

  DistributionFunctional(int n, double R);
  DistributionFunctional(int n, double R, Options options);

  Dimension dim() const noexcept { return dim_; }
  double radius() const noexcept { return R_; }
  int order() const noexcept { return spec_.m; }
  /// c_n or d_n.
  double constant() const noexcept { return constant_; }
  const RadialDerivativeSpec& stencil() const noexcept { return spec_; }

  /// Largest |x| the action ever samples: R plus the stencil half width.
  double reach() const noexcept { return R_ + (spec_.m > 0 ? spec_.half_width() : 0.0); }

  std::complex<double> action(const ComplexPointFunction& phi) const;
  double action(const RealPointFunction& phi) const;

 private:
  Dimension dim_;
  double R_;
  RadialDerivativeSpec spec_;
  double constant_;
  BallRule rule_;
};

/// Tensor-product Gauss-Legendre box for Fourier integrals of test functions.
struct FourierBox {
  double half_width = 6.0;
  int nodes_per_axis = 64;
  /// Largest |phi| allowed on the box faces, relative to max |phi| on the grid.
  double tail_threshold = 1e-14;
};

struct FourierCheck {
  double lhs = 0.0;       // Re T(phi_hat)
  double lhs_imag = 0.0;  // Im T(phi_hat), zero for real even-symmetric data
  double rhs = 0.0;       // int sin(R|xi|)/|xi| phi(xi) dxi
};

/// Evaluates both sides of T_R(phi_hat) = int sin(R|xi|)/|xi| phi(xi) dxi.
///
/// phi_hat(x) = int phi(xi) exp(-i x.xi) dxi is computed by the tensor rule
/// of `box` wherever T_R samples it. The right side uses an independent
/// polar rule: Gauss-Legendre in |xi| on [0, half_width] times the sphere
/// rule. Throws ConfigError if phi is not negligible on the box faces.
FourierCheck distribution_fourier_check(const DistributionFunctional& T, const RealPointFunction& phi,
                                        const FourierBox& box = {});

}  // namespace wavecauchy

#include "wavecauchy/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "wavecauchy/constants.hpp"
#include "wavecauchy/gauss.hpp"
#include "wavecauchy/kernel.hpp"

namespace wavecauchy {
namespace {

using cplx = std::complex<double>;

RadialDerivativeSpec make_spec(Dimension dim, double R, const std::optional<double>& h) {
  if (dim.n() < 2) throw DomainError("T_R is defined for n >= 2");
  if (!(R > 0.0)) throw DomainError("T_R needs R > 0");
  const int m = dim.half_order();
  auto spec = RadialDerivativeSpec::standard(m, h.value_or(R / (4.0 * m + 12.0)));
  if (m > 0) spec.validate_for_radius(R);
  return spec;
}

// Fourier transform of a sampled test function on a tensor Gauss-Legendre grid,
// evaluated by contracting one axis at a time.
class TensorFourier {
 public:
  TensorFourier(int n, const RealPointFunction& phi, const FourierBox& box)
      : n_(n), rule_(gauss_legendre_on(box.nodes_per_axis, -box.half_width, box.half_width)) {
    const std::size_t N = rule_.size();
    std::size_t total = 1;
    for (int k = 0; k < n_; ++k) total *= N;
    samples_.resize(total);
    std::vector<double> x(n_);
    std::vector<std::size_t> idx(n_, 0);
    double peak = 0.0;
    for (std::size_t flat = 0; flat < total; ++flat) {
      double w = 1.0;
      for (int k = 0; k < n_; ++k) {
        x[k] = rule_.nodes[idx[k]];
        w *= rule_.weights[idx[k]];
      }
      const double v = phi(std::span<const double>(x));
      if (!std::isfinite(v)) throw EvaluationError("test function is not finite on the Fourier grid");
      peak = std::max(peak, std::abs(v));
      samples_[flat] = w * v;
      for (int k = n_ - 1; k >= 0; --k) {
        if (++idx[k] < N) break;
        idx[k] = 0;
      }
    }
    check_tail(phi, box, peak);
  }

  cplx operator()(std::span<const double> x) const {
    const std::size_t N = rule_.size();
    std::vector<cplx> buffer(samples_.begin(), samples_.end());
    std::size_t block = buffer.size();
    std::vector<cplx> phase(N);
    for (int axis = n_ - 1; axis >= 0; --axis) {
      for (std::size_t i = 0; i < N; ++i) phase[i] = std::polar(1.0, -rule_.nodes[i] * x[axis]);
      block /= N;
      for (std::size_t b = 0; b < block; ++b) {
        cplx s{};
        const cplx* row = buffer.data() + b * N;
        for (std::size_t i = 0; i < N; ++i) s += phase[i] * row[i];
        buffer[b] = s;
      }
    }
    return buffer[0];
  }

 private:
  void check_tail(const RealPointFunction& phi, const FourierBox& box, double peak) const {
    // phi on each face of the box, sampled at the grid's own nodes.
    const std::size_t N = rule_.size();
    std::size_t face = 1;
    for (int k = 1; k < n_; ++k) face *= N;
    std::vector<double> x(n_);
    double worst = 0.0;
    for (int axis = 0; axis < n_; ++axis) {
      for (double side : {-box.half_width, box.half_width}) {
        for (std::size_t flat = 0; flat < face; ++flat) {
          std::size_t rest = flat;
          for (int k = 0; k < n_; ++k) {
            if (k == axis) {
              x[k] = side;
            } else {
              x[k] = rule_.nodes[rest % N];
              rest /= N;
            }
          }
          worst = std::max(worst, std::abs(phi(std::span<const double>(x))));
        }
      }
    }
    if (worst > box.tail_threshold * std::max(peak, 1e-300)) {
      throw ConfigError("Fourier box half width " + std::to_string(box.half_width) +
                            " too small: test function reaches " + std::to_string(worst) + " on its faces",
                        {"fourier.half_width"});
    }
  }

  int n_;
  QuadratureRule rule_;
  std::vector<double> samples_;  // weight * phi at each tensor node, row-major
};

}  // namespace

DistributionFunctional::DistributionFunctional(int n, double R) : DistributionFunctional(n, R, Options{}) {}

DistributionFunctional::DistributionFunctional(int n, double R, Options options)
    : dim_(n),
      R_(R),
      spec_(make_spec(dim_, R, options.h)),
      constant_(dim_.odd() ? odd_constant(n) : even_constant(n)),
      rule_(options.sphere ? *options.sphere : SphereQuadrature::with_defaults(n), options.radial_nodes) {
  if (rule_.dimension() != n) throw UsageError("sphere rule dimension does not match T_R");
}

std::complex<double> DistributionFunctional::action(const ComplexPointFunction& phi) const {
  const int n = dim_.n();
  const std::vector<double> origin(n, 0.0);
  if (dim_.odd()) {
    // rho^{n-2} M_rho phi(0) = (1/(omega_n rho)) int_{|x|=rho} phi dsigma
    const auto core = [&](double rho) -> cplx {
      return std::pow(rho, n - 2) * sphere_average(phi, origin, rho, rule_.angular());
    };
    return constant_ * iterated_radial_derivative(core, spec_, R_);
  }
  const double v_n = unit_ball_volume(n);
  const auto core = [&](double rho) -> cplx { return weighted_ball_integral(phi, origin, rho, rule_) / v_n; };
  return constant_ * iterated_radial_derivative(core, spec_, R_);
}

double DistributionFunctional::action(const RealPointFunction& phi) const {
  return action(ComplexPointFunction([&phi](std::span<const double> x) { return cplx(phi(x), 0.0); })).real();
}

FourierCheck distribution_fourier_check(const DistributionFunctional& T, const RealPointFunction& phi,
                                        const FourierBox& box) {
  const int n = T.dim().n();
  if (!(box.half_width > 0.0) || box.nodes_per_axis < 2) {
    throw ConfigError("Fourier box needs positive half width and >= 2 nodes", {"fourier.half_width"});
  }
  const TensorFourier transform(n, phi, box);
  const cplx lhs = T.action(ComplexPointFunction([&](std::span<const double> x) { return transform(x); }));

  // Polar rule for the right side, independent of the tensor grid.
  const auto sphere = SphereQuadrature::with_defaults(n);
  const auto radial = gauss_legendre_on(2 * box.nodes_per_axis, 0.0, box.half_width);
  const std::vector<double> origin(n, 0.0);
  double rhs = 0.0;
  for (std::size_t j = 0; j < radial.size(); ++j) {
    const double r = radial.nodes[j];
    rhs += radial.weights[j] * sinc_kernel_radial(r, T.radius()) * integrate_on_sphere(phi, origin, r, sphere);
  }
  return {lhs.real(), lhs.imag(), rhs};
}

}  // namespace wavecauchy

#include "wavecauchy/radial_derivative.hpp"

#include <algorithm>

namespace wavecauchy {
namespace {

// Fornberg (1988): weights[k][j] for the k-th derivative at 0 of the
// interpolant through `nodes`, k = 0..max_order.
std::vector<std::vector<double>> fornberg(const std::vector<double>& nodes, int max_order) {
  const int count = static_cast<int>(nodes.size());
  std::vector<std::vector<double>> c(max_order + 1, std::vector<double>(count, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0];
  c[0][0] = 1.0;
  for (int i = 1; i < count; ++i) {
    const int mn = std::min(i, max_order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i];
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (int k = mn; k >= 1; --k) c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c;
}

// Coefficients of g'(tau) / tau around tau = t, truncated one order below g.
std::vector<double> apply_radial_operator(const std::vector<double>& a, double t) {
  const std::size_t K = a.size() - 1;
  std::vector<double> b(K), out(K, 0.0);
  for (std::size_t k = 0; k < K; ++k) b[k] = (k + 1) * a[k + 1];
  std::vector<double> inv(K);
  double p = 1.0 / t;
  for (std::size_t j = 0; j < K; ++j) {
    inv[j] = p;
    p *= -1.0 / t;
  }
  for (std::size_t k = 0; k < K; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j <= k; ++j) s += b[k - j] * inv[j];
    out[k] = s;
  }
  return out;
}

}  // namespace

void RadialDerivativeSpec::validate() const {
  if (m < 0) throw DomainError("radial derivative order must be non-negative");
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("stencil spacing must be positive");
  if (stencil_degree % 2 != 0 || stencil_degree < m + 2) {
    throw DomainError("stencil degree must be even and at least m + 2, got " +
                      std::to_string(stencil_degree));
  }
}

void RadialDerivativeSpec::validate_for_radius(double R) const {
  validate();
  if (!(h < R / (2.0 * m + 6.0))) {
    throw StencilError("stencil spacing h = " + std::to_string(h) + " must stay below R/(2m+6) = " +
                       std::to_string(R / (2.0 * m + 6.0)));
  }
}

std::vector<double> stencil_radii(const RadialDerivativeSpec& spec, double t) {
  spec.validate();
  const int half = spec.stencil_degree / 2;
  if (t - half * spec.h <= 0.0) {
    throw StencilError("stencil reaches non-positive radius: t = " + std::to_string(t) +
                       ", half width = " + std::to_string(half * spec.h));
  }
  std::vector<double> radii(spec.points());
  for (int j = -half; j <= half; ++j) radii[j + half] = t + j * spec.h;
  return radii;
}

std::vector<double> radial_derivative_weights(const RadialDerivativeSpec& spec, double t,
                                              int extra_derivatives) {
  const auto radii = stencil_radii(spec, t);
  if (extra_derivatives < 0 || spec.m + extra_derivatives > spec.stencil_degree) {
    throw DomainError("too many derivatives for the stencil degree");
  }
  const int degree = spec.stencil_degree;
  const int half = degree / 2;
  std::vector<double> offsets(spec.points());
  for (int j = -half; j <= half; ++j) offsets[j + half] = j;
  const auto unit = fornberg(offsets, degree);

  std::vector<double> weights(spec.points());
  double factorial = 1.0;
  for (int k = 2; k <= extra_derivatives; ++k) factorial *= k;
  for (int j = 0; j < spec.points(); ++j) {
    // Taylor coefficients in u = tau - t of the Lagrange basis polynomial j.
    std::vector<double> a(degree + 1);
    double inv_fact = 1.0, h_pow = 1.0;
    for (int k = 0; k <= degree; ++k) {
      if (k > 0) {
        inv_fact /= k;
        h_pow *= spec.h;
      }
      a[k] = unit[k][j] * inv_fact / h_pow;
    }
    for (int stage = 0; stage < spec.m; ++stage) a = apply_radial_operator(a, t);
    weights[j] = factorial * a[extra_derivatives];
  }
  return weights;
}

}  // namespace wavecauchy

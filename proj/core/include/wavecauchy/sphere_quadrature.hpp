#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wavecauchy/errors.hpp"

namespace wavecauchy {

/// Product rule on the unit sphere S^{n-1} in R^n.
///
/// Built in hyperspherical coordinates
///   x_n     = cos p1
///   x_{n-1} = sin p1 cos p2
///   ...
///   x_2     = sin p1 ... sin p_{n-2} cos p_{n-1}
///   x_1     = sin p1 ... sin p_{n-2} sin p_{n-1}
/// with surface element sin^{n-2} p1 ... sin p_{n-2}. Each latitude p_k is
/// integrated by a Gauss-Gegenbauer rule in cos p_k that absorbs its sine
/// power; the azimuth p_{n-1} by the trapezoid rule. S^0 is the pair {-1, +1}.
class SphereQuadrature {
 public:
  SphereQuadrature(int n, int latitude_nodes, int azimuth_nodes);

  /// Sizes used when a caller does not choose: 64 x 128 up to n = 3, then
  /// shrinking per-angle counts so the product stays near 10^5 nodes.
  static SphereQuadrature with_defaults(int n);
  static int default_latitude_nodes(int n);
  static int default_azimuth_nodes(int n);

  int dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return weights_.size(); }
  int latitude_nodes() const noexcept { return latitude_nodes_; }
  int azimuth_nodes() const noexcept { return azimuth_nodes_; }

  /// Largest total degree d such that every monomial of degree <= d is integrated exactly.
  int order() const noexcept { return order_; }

  std::span<const double> node(std::size_t i) const noexcept {
    return {nodes_.data() + i * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }
  std::span<const double> weights() const noexcept { return weights_; }

 private:
  int n_;
  int latitude_nodes_;
  int azimuth_nodes_;
  int order_;
  std::vector<double> nodes_;  // row-major, size() x n
  std::vector<double> weights_;
};

/// Sum_i w_i R^{n-1} g(center + R node_i), approximating the surface integral
/// of g over the sphere of radius R about center. g may return double or
/// std::complex<double>.
template <class G>
auto integrate_on_sphere(G&& g, std::span<const double> center, double R, const SphereQuadrature& q) {
  const int n = q.dimension();
  if (center.size() != static_cast<std::size_t>(n)) {
    throw UsageError("integrate_on_sphere: center has " + std::to_string(center.size()) +
                     " components, rule is for n = " + std::to_string(n));
  }
  using Value = decltype(g(std::span<const double>{}));
  std::vector<double> y(n);
  Value sum{};
  const auto w = q.weights();
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto u = q.node(i);
    for (int k = 0; k < n; ++k) y[k] = center[k] + R * u[k];
    sum += w[i] * g(std::span<const double>(y));
  }
  double scale = 1.0;
  for (int k = 1; k < n; ++k) scale *= R;
  return sum * scale;
}

}  // namespace wavecauchy

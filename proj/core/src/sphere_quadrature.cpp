#include "wavecauchy/sphere_quadrature.hpp"

#include <cmath>
#include <numbers>

#include "wavecauchy/dimension.hpp"
#include "wavecauchy/gauss.hpp"

namespace wavecauchy {

int SphereQuadrature::default_latitude_nodes(int n) {
  switch (n) {
    case 1:
    case 2: return 0;
    case 3: return 64;
    case 4: return 24;
    case 5: return 12;
    case 6: return 8;
    case 7: return 6;
    case 8: return 4;
    default: return 3;
  }
}

int SphereQuadrature::default_azimuth_nodes(int n) {
  if (n == 1) return 0;
  if (n <= 3) return 128;
  return 2 * default_latitude_nodes(n);
}

SphereQuadrature SphereQuadrature::with_defaults(int n) {
  return SphereQuadrature(n, default_latitude_nodes(n), default_azimuth_nodes(n));
}

SphereQuadrature::SphereQuadrature(int n, int latitude_nodes, int azimuth_nodes)
    : n_(Dimension(n).n()), latitude_nodes_(latitude_nodes), azimuth_nodes_(azimuth_nodes) {
  if (n_ == 1) {
    nodes_ = {-1.0, 1.0};
    weights_ = {1.0, 1.0};
    latitude_nodes_ = azimuth_nodes_ = 0;
    order_ = 1 << 20;
    return;
  }
  if (azimuth_nodes_ < 1) throw DomainError("sphere rule needs at least one azimuth node");
  if (n_ >= 3 && latitude_nodes_ < 1) throw DomainError("sphere rule needs at least one latitude node");
  if (n_ == 2) latitude_nodes_ = 0;

  const int angles = n_ - 2;  // latitude angles p_1 .. p_{n-2}
  std::vector<std::shared_ptr<const QuadratureRule>> rules;
  for (int k = 1; k <= angles; ++k) {
    const int sine_power = n_ - 1 - k;
    rules.push_back(gauss_gegenbauer(latitude_nodes_, 0.5 * (sine_power - 1)));
  }
  order_ = angles > 0 ? std::min(2 * latitude_nodes_ - 1, azimuth_nodes_ - 1) : azimuth_nodes_ - 1;

  std::size_t total = static_cast<std::size_t>(azimuth_nodes_);
  for (int k = 0; k < angles; ++k) total *= static_cast<std::size_t>(latitude_nodes_);
  nodes_.resize(total * n_);
  weights_.resize(total);

  const double dphi = 2.0 * std::numbers::pi / azimuth_nodes_;
  std::vector<int> idx(angles, 0);
  std::size_t out = 0;
  while (true) {
    double weight = dphi;
    double sine_product = 1.0;
    double* x = nodes_.data() + out * n_;
    for (int k = 0; k < angles; ++k) {
      const double zeta = rules[k]->nodes[idx[k]];
      weight *= rules[k]->weights[idx[k]];
      x[n_ - 1 - k] = sine_product * zeta;
      sine_product *= std::sqrt(std::max(0.0, 1.0 - zeta * zeta));
    }
    for (int j = 0; j < azimuth_nodes_; ++j) {
      double* y = nodes_.data() + (out + j) * n_;
      if (j > 0) std::copy(x + 2, x + n_, y + 2);
      const double phi = j * dphi;
      y[1] = sine_product * std::cos(phi);
      y[0] = sine_product * std::sin(phi);
      weights_[out + j] = weight;
    }
    out += azimuth_nodes_;

    int k = angles - 1;
    while (k >= 0 && ++idx[k] == latitude_nodes_) idx[k--] = 0;
    if (k < 0) break;
  }
}

}  // namespace wavecauchy

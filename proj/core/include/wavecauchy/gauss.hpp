#pragma once

#include <memory>
#include <vector>

namespace wavecauchy {

/// Nodes and weights of a one-dimensional rule, ascending nodes.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Gauss rule on [-1, 1] for the weight (1 - x^2)^alpha, alpha > -1.
///
/// Exact for polynomials of degree <= 2 * points - 1 against that weight.
/// alpha = 0 is Gauss-Legendre. Rules are memoized per (points, alpha); the
/// returned pointer stays valid for the lifetime of the process.
std::shared_ptr<const QuadratureRule> gauss_gegenbauer(int points, double alpha);

inline std::shared_ptr<const QuadratureRule> gauss_legendre(int points) {
  return gauss_gegenbauer(points, 0.0);
}

/// Affine map of a [-1, 1] Gauss-Legendre rule to [a, b].
QuadratureRule gauss_legendre_on(int points, double a, double b);

}  // namespace wavecauchy

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace wavecauchy {

using PointFunction = std::function<double(std::span<const double>)>;

struct MonteCarloEstimate {
  double value = 0.0;
  double sigma = 0.0;  // standard error of `value`
  std::size_t samples = 0;

  /// |value - exact| <= k_sigma * sigma. A zero-variance estimate (constant
  /// integrand on the sphere) is compared at rounding level instead.
  bool within(double exact, double k_sigma = 3.0) const {
    const double floor = 1e-13 * std::abs(exact);
    return std::abs(value - exact) <= std::max(k_sigma * sigma, floor);
  }
};

inline constexpr std::size_t kDefaultMonteCarloSamples = 1'000'000;
inline constexpr std::uint64_t kDefaultMonteCarloSeed = 0x5eed'0f'da1e'7b3dULL;

/// Integral of g over B(0, R) in R^n by rejection in the bounding cube.
/// `samples` counts cube draws; points outside the ball contribute zero.
MonteCarloEstimate monte_carlo_ball(const PointFunction& g, int n, double R,
                                    std::size_t samples = kDefaultMonteCarloSamples,
                                    std::uint64_t seed = kDefaultMonteCarloSeed);

/// Integral of g over the sphere |x| = R, uniform directions from normalized
/// Gaussian vectors.
MonteCarloEstimate monte_carlo_sphere(const PointFunction& g, int n, double R,
                                      std::size_t samples = kDefaultMonteCarloSamples,
                                      std::uint64_t seed = kDefaultMonteCarloSeed);

}  // namespace wavecauchy

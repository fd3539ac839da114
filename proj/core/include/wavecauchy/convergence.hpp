#pragma once

#include <span>
#include <vector>

namespace wavecauchy {

struct ObservedOrder {
  /// log(r_i / r_{i+1}) / log(h_i / h_{i+1}) for each consecutive pair.
  std::vector<double> pairwise;
  /// Least-squares slope of log r against log h over the unsaturated levels; NaN if fewer than two.
  double order = 0.0;
  /// Some residual sits at or below the floor, so it carries no order information.
  bool saturated = false;
  /// Residuals strictly decrease from level to level.
  bool monotone = false;
};

/// Fits the observed order of a refinement ladder. Needs >= 3 levels with
/// positive, strictly decreasing h; UsageError otherwise.
ObservedOrder observed_order(std::span<const double> h, std::span<const double> residuals, double floor = 1e-13);

}  // namespace wavecauchy

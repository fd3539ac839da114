#include "wavecauchy/convergence.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "wavecauchy/errors.hpp"

namespace wavecauchy {

ObservedOrder observed_order(std::span<const double> h, std::span<const double> residuals, double floor) {
  if (h.size() != residuals.size()) throw UsageError("ladder has mismatched h and residual counts");
  if (h.size() < 3) throw UsageError("convergence ladder needs at least 3 levels, got " + std::to_string(h.size()));
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!(h[i] > 0.0)) throw UsageError("ladder spacings must be positive");
    if (i > 0 && !(h[i] < h[i - 1])) throw UsageError("ladder spacings must strictly decrease");
    if (!(residuals[i] >= 0.0)) throw UsageError("ladder residuals must be non-negative");
  }
  ObservedOrder out;
  out.monotone = true;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int used = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i + 1 < h.size()) {
      out.monotone = out.monotone && residuals[i + 1] < residuals[i];
      const bool both = residuals[i] > floor && residuals[i + 1] > floor;
      out.pairwise.push_back(both ? std::log(residuals[i] / residuals[i + 1]) / std::log(h[i] / h[i + 1])
                                  : std::numeric_limits<double>::quiet_NaN());
    }
    if (residuals[i] <= floor) {
      out.saturated = true;
      continue;
    }
    const double x = std::log(h[i]), y = std::log(residuals[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++used;
  }
  out.order = used >= 2 ? (used * sxy - sx * sy) / (used * sxx - sx * sx) : std::numeric_limits<double>::quiet_NaN();
  return out;
}

}  // namespace wavecauchy

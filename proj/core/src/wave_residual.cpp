#include "wavecauchy/wave_residual.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavecauchy/dimension.hpp"
#include "wavecauchy/errors.hpp"

namespace wavecauchy {

std::size_t SpaceTimeSlab::spatial_size() const {
  std::size_t s = 1;
  for (int k = 0; k < n; ++k) s *= static_cast<std::size_t>(points);
  return s;
}

SpaceTimeSlab sample_slab(const std::function<double(std::span<const double>, double)>& u, int n,
                          std::span<const double> origin, double t0, int points, int levels, double h_x,
                          double h_t) {
  Dimension{n};
  if (origin.size() != static_cast<std::size_t>(n)) throw UsageError("slab origin has the wrong dimension");
  if (points < 1 || levels < 1) throw UsageError("slab needs at least one point and one level");
  if (!(h_x > 0.0) || !(h_t > 0.0)) throw DomainError("slab spacings must be positive");
  SpaceTimeSlab slab{n, points, levels, h_x, h_t, {}};
  const std::size_t S = slab.spatial_size();
  slab.values.resize(S * levels);
  std::vector<double> x(n);
  for (int l = 0; l < levels; ++l) {
    const double t = t0 + h_t * l;
    for (std::size_t flat = 0; flat < S; ++flat) {
      std::size_t rest = flat;
      for (int k = n - 1; k >= 0; --k) {
        x[k] = origin[k] + h_x * static_cast<double>(rest % points);
        rest /= points;
      }
      slab.values[l * S + flat] = u(x, t);
    }
  }
  return slab;
}

SpaceTimeSlab centred_slab(const std::function<double(std::span<const double>, double)>& u,
                           std::span<const double> center, double t_mid, int points, int levels, double h_x,
                           double h_t) {
  if (points % 2 == 0 || levels % 2 == 0) throw UsageError("centred slab needs odd point and level counts");
  std::vector<double> origin(center.begin(), center.end());
  for (double& c : origin) c -= h_x * (points / 2);
  return sample_slab(u, static_cast<int>(center.size()), origin, t_mid - h_t * (levels / 2), points, levels, h_x,
                     h_t);
}

double wave_residual(const SpaceTimeSlab& slab) {
  if (slab.levels < 3 || slab.points < 3) {
    throw UsageError("slab too thin: need >= 3 time levels and >= 3 points per axis, got " +
                     std::to_string(slab.levels) + " levels, " + std::to_string(slab.points) + " points");
  }
  const std::size_t S = slab.spatial_size();
  if (slab.values.size() != S * slab.levels) throw UsageError("slab value count does not match its shape");
  const int N = slab.points;
  std::vector<std::size_t> stride(slab.n);
  std::size_t s = 1;
  for (int k = slab.n - 1; k >= 0; --k) {
    stride[k] = s;
    s *= N;
  }
  const double ht2 = slab.h_t * slab.h_t;
  const double hx2 = slab.h_x * slab.h_x;
  double worst = 0.0;
  for (int l = 1; l + 1 < slab.levels; ++l) {
    for (std::size_t flat = 0; flat < S; ++flat) {
      bool interior = true;
      for (int k = 0; k < slab.n && interior; ++k) {
        const auto j = (flat / stride[k]) % N;
        interior = j > 0 && j + 1 < static_cast<std::size_t>(N);
      }
      if (!interior) continue;
      const double c = slab.at(l, flat);
      const double utt = (slab.at(l + 1, flat) - 2.0 * c + slab.at(l - 1, flat)) / ht2;
      double lap = 0.0;
      for (int k = 0; k < slab.n; ++k) {
        lap += (slab.at(l, flat + stride[k]) - 2.0 * c + slab.at(l, flat - stride[k])) / hx2;
      }
      worst = std::max(worst, std::abs(utt - lap));
    }
  }
  return worst;
}

}  // namespace wavecauchy

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace wavecauchy {

/// Samples of u on a uniform (x, t) slab. Spatial nodes are
/// origin + h_x * j per axis, j = 0..points-1; time levels t0 + h_t * l.
/// values is level-major, then row-major in x with the last axis fastest.
struct SpaceTimeSlab {
  int n = 1;
  int points = 3;
  int levels = 3;
  double h_x = 0.1;
  double h_t = 0.1;
  std::vector<double> values;

  std::size_t spatial_size() const;
  double at(int level, std::size_t flat) const { return values[level * spatial_size() + flat]; }
};

/// Fills a slab from u(x, t). `origin` is the first spatial node.
SpaceTimeSlab sample_slab(const std::function<double(std::span<const double>, double)>& u, int n,
                          std::span<const double> origin, double t0, int points, int levels, double h_x,
                          double h_t);

/// Slab centred on (center, t_mid) with `points` nodes per axis and `levels`
/// time levels, both odd.
SpaceTimeSlab centred_slab(const std::function<double(std::span<const double>, double)>& u,
                           std::span<const double> center, double t_mid, int points, int levels, double h_x,
                           double h_t);

/// max over interior points of |D_tt u - sum_k D_kk u| with second central
/// differences. UsageError unless levels >= 3 and points >= 3.
double wave_residual(const SpaceTimeSlab& slab);

}  // namespace wavecauchy

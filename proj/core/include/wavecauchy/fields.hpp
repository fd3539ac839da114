#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wavecauchy/dimension.hpp"

namespace wavecauchy {

/// Initial datum phi or psi on R^n.
struct ScalarField {
  std::function<double(std::span<const double>)> evaluator;
  Dimension dim{1};
  /// |evaluator(x)| <= 1e-14 whenever |x| > support_radius. Empty means unbounded.
  std::optional<double> support_radius;
  /// Data that is periodic on every grid whose side is a multiple of its
  /// period (lattice Fourier modes, constants). Only the spectral solver cares.
  bool periodic = false;
  std::string smoothness_tag;

  double operator()(std::span<const double> x) const { return evaluator(x); }
};

/// Built-in data library.
namespace fields {

/// amplitude * exp(-|x - center|^2 / (2 sigma^2)); support radius where it drops below 1e-14.
ScalarField gaussian(int n, double sigma, std::vector<double> center = {}, double amplitude = 1.0);

/// exp(1 - 1 / (1 - |x - center|^2 / a^2)) inside |x - center| < a, zero outside. Peak 1, C-infinity.
ScalarField bump(int n, double a, std::vector<double> center = {});

/// Harmonic polynomials by id:
///   0: 1            1: x1            2: x1^2 - x2^2       3: x1 x2
///   4: x1^3 - 3 x1 x2^2               5: x1 x2 x3
///   6: 1 + 2 x1 - x2 + (x1^2 - x2^2) + 3 x1 x2 + (x1^3 - 3 x1 x2^2)
/// Ids 2-4 and 6 need n >= 2, id 5 needs n >= 3; UsageError otherwise.
ScalarField harmonic(int n, int poly_id);
inline constexpr int kHarmonicCount = 7;

ScalarField constant(int n, double c);
ScalarField zero(int n);

/// cos(k . x), a single Fourier mode.
ScalarField cosine_mode(std::vector<double> k);

/// a f + b g; support is the larger of the two.
ScalarField combine(double a, const ScalarField& f, double b, const ScalarField& g);

}  // namespace fields

/// Spot-checks the support invariant on `samples` random points outside the support.
bool support_holds(const ScalarField& field, int samples = 256, unsigned seed = 7);

}  // namespace wavecauchy

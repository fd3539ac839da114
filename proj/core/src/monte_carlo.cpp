#include "wavecauchy/monte_carlo.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "wavecauchy/constants.hpp"
#include "wavecauchy/errors.hpp"

namespace wavecauchy {
namespace {

// Welford accumulator for mean and variance.
struct Moments {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double v) {
    ++count;
    const double d = v - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (v - mean);
  }
  double standard_error() const {
    if (count < 2) return 0.0;
    return std::sqrt(m2 / static_cast<double>(count - 1) / static_cast<double>(count));
  }
};

void check(int n, double R, std::size_t samples) {
  unit_sphere_area(n);  // range check
  if (!(R > 0.0)) throw DomainError("radius must be positive");
  if (samples < 2) throw DomainError("Monte Carlo needs at least two samples");
}

}  // namespace

MonteCarloEstimate monte_carlo_ball(const PointFunction& g, int n, double R, std::size_t samples,
                                    std::uint64_t seed) {
  check(n, R, samples);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-R, R);
  std::vector<double> x(n);
  Moments moments;
  const double R2 = R * R;
  for (std::size_t s = 0; s < samples; ++s) {
    double r2 = 0.0;
    for (int k = 0; k < n; ++k) {
      x[k] = coord(rng);
      r2 += x[k] * x[k];
    }
    moments.push(r2 <= R2 ? g(std::span<const double>(x)) : 0.0);
  }
  const double cube = std::pow(2.0 * R, n);
  return {cube * moments.mean, cube * moments.standard_error(), samples};
}

MonteCarloEstimate monte_carlo_sphere(const PointFunction& g, int n, double R, std::size_t samples,
                                      std::uint64_t seed) {
  check(n, R, samples);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> x(n);
  Moments moments;
  for (std::size_t s = 0; s < samples; ++s) {
    double r2 = 0.0;
    do {
      r2 = 0.0;
      for (int k = 0; k < n; ++k) {
        x[k] = normal(rng);
        r2 += x[k] * x[k];
      }
    } while (r2 == 0.0);
    const double scale = R / std::sqrt(r2);
    for (int k = 0; k < n; ++k) x[k] *= scale;
    moments.push(g(std::span<const double>(x)));
  }
  const double area = unit_sphere_area(n) * std::pow(R, n - 1);
  return {area * moments.mean, area * moments.standard_error(), samples};
}

}  // namespace wavecauchy

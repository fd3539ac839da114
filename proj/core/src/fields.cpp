#include "wavecauchy/fields.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace wavecauchy {
namespace {

std::vector<double> checked_center(int n, std::vector<double> center) {
  if (center.empty()) center.assign(n, 0.0);
  if (center.size() != static_cast<std::size_t>(n)) {
    throw UsageError("center has " + std::to_string(center.size()) + " components, field is " +
                     std::to_string(n) + "-dimensional");
  }
  return center;
}

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

namespace fields {

ScalarField gaussian(int n, double sigma, std::vector<double> center, double amplitude) {
  const Dimension dim(n);
  if (!(sigma > 0.0)) throw DomainError("gaussian width must be positive");
  center = checked_center(n, std::move(center));
  const double inv = 1.0 / (2.0 * sigma * sigma);
  ScalarField f;
  f.dim = dim;
  f.evaluator = [center, inv, amplitude](std::span<const double> x) {
    double r2 = 0.0;
    for (std::size_t k = 0; k < center.size(); ++k) r2 += (x[k] - center[k]) * (x[k] - center[k]);
    return amplitude * std::exp(-r2 * inv);
  };
  const double level = std::max(1e-300, 1e-14 / std::max(std::abs(amplitude), 1e-300));
  f.support_radius = norm(center) + (level < 1.0 ? sigma * std::sqrt(-2.0 * std::log(level)) : 0.0);
  f.smoothness_tag = "analytic";
  return f;
}

ScalarField bump(int n, double a, std::vector<double> center) {
  const Dimension dim(n);
  if (!(a > 0.0)) throw DomainError("bump radius must be positive");
  center = checked_center(n, std::move(center));
  const double inv_a2 = 1.0 / (a * a);
  ScalarField f;
  f.dim = dim;
  f.evaluator = [center, inv_a2](std::span<const double> x) {
    double r2 = 0.0;
    for (std::size_t k = 0; k < center.size(); ++k) r2 += (x[k] - center[k]) * (x[k] - center[k]);
    const double s = r2 * inv_a2;
    return s < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - s)) : 0.0;
  };
  f.support_radius = norm(center) + a;
  f.smoothness_tag = "C-infinity, compact";
  return f;
}

ScalarField harmonic(int n, int poly_id) {
  const Dimension dim(n);
  const int needs = poly_id == 5 ? 3 : (poly_id >= 2 ? 2 : 1);
  if (poly_id < 0 || poly_id >= kHarmonicCount) {
    throw UsageError("unknown harmonic polynomial id " + std::to_string(poly_id));
  }
  if (n < needs) {
    throw UsageError("harmonic polynomial " + std::to_string(poly_id) + " needs n >= " + std::to_string(needs));
  }
  ScalarField f;
  f.dim = dim;
  f.smoothness_tag = "harmonic polynomial";
  switch (poly_id) {
    case 0: f.evaluator = [](std::span<const double>) { return 1.0; }; break;
    case 1: f.evaluator = [](std::span<const double> x) { return x[0]; }; break;
    case 2: f.evaluator = [](std::span<const double> x) { return x[0] * x[0] - x[1] * x[1]; }; break;
    case 3: f.evaluator = [](std::span<const double> x) { return x[0] * x[1]; }; break;
    case 4:
      f.evaluator = [](std::span<const double> x) { return x[0] * x[0] * x[0] - 3.0 * x[0] * x[1] * x[1]; };
      break;
    case 5: f.evaluator = [](std::span<const double> x) { return x[0] * x[1] * x[2]; }; break;
    default:
      f.evaluator = [](std::span<const double> x) {
        const double a = x[0], b = x[1];
        return 1.0 + 2.0 * a - b + (a * a - b * b) + 3.0 * a * b + (a * a * a - 3.0 * a * b * b);
      };
  }
  return f;
}

ScalarField constant(int n, double c) {
  ScalarField f;
  f.dim = Dimension(n);
  f.evaluator = [c](std::span<const double>) { return c; };
  f.periodic = true;
  f.smoothness_tag = "constant";
  if (c == 0.0) f.support_radius = 0.0;
  return f;
}

ScalarField zero(int n) { return constant(n, 0.0); }

ScalarField cosine_mode(std::vector<double> k) {
  ScalarField f;
  f.dim = Dimension(static_cast<int>(k.size()));
  f.evaluator = [k](std::span<const double> x) {
    double phase = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) phase += k[i] * x[i];
    return std::cos(phase);
  };
  f.periodic = true;
  f.smoothness_tag = "analytic";
  return f;
}

ScalarField combine(double a, const ScalarField& f, double b, const ScalarField& g) {
  if (f.dim != g.dim) throw UsageError("cannot combine fields of different dimension");
  ScalarField out;
  out.dim = f.dim;
  out.evaluator = [a, b, fe = f.evaluator, ge = g.evaluator](std::span<const double> x) {
    return a * fe(x) + b * ge(x);
  };
  if (f.support_radius && g.support_radius) out.support_radius = std::max(*f.support_radius, *g.support_radius);
  out.periodic = f.periodic && g.periodic;
  out.smoothness_tag = "combination";
  return out;
}

}  // namespace fields

bool support_holds(const ScalarField& field, int samples, unsigned seed) {
  if (!field.support_radius) return true;
  const int n = field.dim.n();
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> stretch(1.0 + 1e-9, 3.0);
  std::vector<double> x(n);
  for (int s = 0; s < samples; ++s) {
    double r2 = 0.0;
    for (int k = 0; k < n; ++k) {
      x[k] = normal(rng);
      r2 += x[k] * x[k];
    }
    const double scale = (*field.support_radius + 1e-12) * stretch(rng) / std::sqrt(r2);
    for (int k = 0; k < n; ++k) x[k] *= scale;
    if (std::abs(field(std::span<const double>(x))) > 1e-14) return false;
  }
  return true;
}

}  // namespace wavecauchy

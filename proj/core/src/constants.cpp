#include "wavecauchy/constants.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "wavecauchy/dimension.hpp"
#include "wavecauchy/errors.hpp"

namespace wavecauchy {
namespace {

void check_range(int n) {
  if (n < 1 || n > Dimension::kMax) {
    throw DomainError("dimension must lie in 1.." + std::to_string(Dimension::kMax) +
                      ", got " + std::to_string(n));
  }
}

double area_formula(int n) {
  const double half = 0.5 * n;
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double volume_formula(int n) {
  const double half = 0.5 * n;
  return std::pow(std::numbers::pi, half) / std::tgamma(half + 1.0);
}

// k (k-2) (k-4) ... down to 1 or 2.
double double_factorial(int k) {
  double p = 1.0;
  for (int j = k; j > 1; j -= 2) p *= j;
  return p;
}

double two_pow_factorial(int m) {
  // 2^m m!
  double p = 1.0;
  for (int j = 1; j <= m; ++j) p *= 2.0 * j;
  return p;
}

std::array<GeomConstants, Dimension::kMax + 1> build_table() {
  std::array<GeomConstants, Dimension::kMax + 1> table{};
  for (int n = 1; n <= Dimension::kMax; ++n) {
    GeomConstants& g = table[n];
    g.n = n;
    g.omega_n = area_formula(n);
    g.v_n = volume_formula(n);
    if (n >= 3 && n % 2 == 1) g.c_n = 1.0 / double_factorial(n - 2);
    if (n >= 2 && n % 2 == 0) g.d_n = 1.0 / double_factorial(n);
  }
  return table;
}

}  // namespace

const GeomConstants& geom_constants(int n) {
  check_range(n);
  static const auto table = build_table();
  return table[n];
}

double unit_sphere_area(int n) { return geom_constants(n).omega_n; }

double unit_ball_volume(int n) { return geom_constants(n).v_n; }

double odd_constant(int n) {
  check_range(n);
  if (n < 3 || n % 2 == 0) throw UsageError("c_n is defined for odd n >= 3, got " + std::to_string(n));
  return *geom_constants(n).c_n;
}

double even_constant(int n) {
  check_range(n);
  if (n < 2 || n % 2 == 1) throw UsageError("d_n is defined for even n >= 2, got " + std::to_string(n));
  return *geom_constants(n).d_n;
}

double odd_constant_from_areas(int n) {
  check_range(n);
  if (n < 3 || n % 2 == 0) throw UsageError("c_n is defined for odd n >= 3, got " + std::to_string(n));
  const int m = (n - 3) / 2;
  return area_formula(n) / area_formula(n - 1) * 0.5 / two_pow_factorial(m);
}

double even_constant_from_descent(int n) {
  check_range(n);
  if (n < 2 || n % 2 == 1) throw UsageError("d_n is defined for even n >= 2, got " + std::to_string(n));
  const int m = (n - 2) / 2;  // (n+1-3)/2
  const double c_next = area_formula(n + 1) / area_formula(n) * 0.5 / two_pow_factorial(m);
  return 2.0 * c_next * volume_formula(n) / area_formula(n + 1);
}

namespace detail {
double unit_sphere_area_unchecked(int n) {
  if (n < 1 || n > Dimension::kMax + 1) {
    throw DomainError("sphere area requested for n = " + std::to_string(n));
  }
  return area_formula(n);
}
}  // namespace detail

}  // namespace wavecauchy

#pragma once

#include <optional>

namespace wavecauchy {

/// Surface area omega_n = 2 pi^{n/2} / Gamma(n/2) of the unit sphere in R^n.
/// omega_1 = 2 counts the two points {-1, +1}. Throws DomainError outside 1..12.
double unit_sphere_area(int n);

/// Volume v_n = pi^{n/2} / Gamma(n/2 + 1) of the unit ball in R^n.
double unit_ball_volume(int n);

/// c_n = 1 / ((n-2)(n-4)...1) for odd n >= 3.
double odd_constant(int n);

/// d_n = 1 / (n(n-2)...2) for even n >= 2.
double even_constant(int n);

/// c_n from the sphere-area ratio omega_n / omega_{n-1} / (2 * 2^m m!), m = (n-3)/2.
/// Independent of the double-factorial product in odd_constant().
double odd_constant_from_areas(int n);

/// d_n = 2 c_{n+1} v_n / omega_{n+1}, the descent form.
double even_constant_from_descent(int n);

struct GeomConstants {
  int n;
  double omega_n;
  double v_n;
  std::optional<double> c_n;  // odd n >= 3 only
  std::optional<double> d_n;  // even n >= 2 only
};

/// Cached per-dimension table, built once on first use.
const GeomConstants& geom_constants(int n);

namespace detail {
// One past Dimension::kMax, needed by the (n+1)-dimensional descent route.
double unit_sphere_area_unchecked(int n);
}  // namespace detail

}  // namespace wavecauchy

#pragma once

#include <span>

#include "wavecauchy/averages.hpp"
#include "wavecauchy/fields.hpp"

namespace wavecauchy {

/// M_t psi(x): average of psi over the sphere of radius t about x.
double spherical_mean(const ScalarField& psi, std::span<const double> x, double t, const SphereQuadrature& q);

/// Weighted ball mean of psi about x, even n only:
///   (1 / (v_n t^n)) int_{|y-x|<t} (t^2 - |x-y|^2)^{-1/2} psi(y) dy.
double weighted_ball_mean(const ScalarField& psi, std::span<const double> x, double t, const BallRule& rule);
double weighted_ball_mean(const ScalarField& psi, std::span<const double> x, double t);

}  // namespace wavecauchy

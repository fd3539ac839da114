#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "wavecauchy/solvers.hpp"

namespace wavecauchy {

/// Periodic box [-L, L)^n with N equally spaced points per axis,
/// x_j = -L + 2L j / N. Arrays are row-major with the last axis fastest.
struct PeriodicGrid {
  int n = 1;
  int points = 64;
  double half_width = 1.0;

  std::size_t size() const;
  double spacing() const { return 2.0 * half_width / points; }
  /// Coordinates of the node with the given flat index.
  std::vector<double> node(std::size_t flat) const;
  /// Flat index of the node at x; UsageError unless x lies on a node.
  std::size_t index_of(std::span<const double> x) const;
  /// Angular wave number of the flat index, per axis.
  std::vector<double> wavenumber(std::size_t flat) const;
  void validate() const;
};

/// Grid values of u(., t).
struct SolutionGrid {
  PeriodicGrid grid;
  double t = 0.0;
  std::vector<double> values;
  Method method = Method::spectral;
  /// Largest imaginary part left after the inverse transform.
  double error_estimate = 0.0;

  double at(std::span<const double> x) const { return values[grid.index_of(x)]; }
};

/// Frequency-domain initial data for the multiplier solution
///   u_hat(xi, t) = phi_hat cos(t|xi|) + psi_hat sin(t|xi|)/|xi|.
class SpectralState {
 public:
  /// Samples phi and psi on the grid and transforms them. Throws
  /// DomainSizeError if a compactly supported datum does not fit in the box,
  /// or if a datum is neither compact nor periodic.
  static SpectralState from_problem(const CauchyProblem& problem, const PeriodicGrid& grid);

  const PeriodicGrid& grid() const noexcept { return grid_; }
  std::span<const std::complex<double>> phi_hat() const noexcept { return phi_hat_; }
  std::span<const std::complex<double>> psi_hat() const noexcept { return psi_hat_; }

  /// Largest support radius among the data (0 for periodic data).
  double support_radius() const noexcept { return support_radius_; }

  /// max_k |F(k) - conj(F(-k))| / max_k |F(k)| over both spectra.
  double hermitian_defect() const;

  std::vector<std::complex<double>> u_hat(double t) const;
  std::vector<std::complex<double>> ut_hat(double t) const;

  /// sum_k |u_t_hat|^2 + |k|^2 |u_hat|^2, scaled by 1/N^n.
  double energy(double t) const;

  /// Inverse transform of u_hat(., t). DomainSizeError if L <= support + t.
  SolutionGrid solution(double t) const;

 private:
  SpectralState(PeriodicGrid grid, double support) : grid_(grid), support_radius_(support) {}

  PeriodicGrid grid_;
  double support_radius_;
  std::vector<std::complex<double>> phi_hat_;
  std::vector<std::complex<double>> psi_hat_;
  std::vector<double> wavenorm_;  // |k| per flat index
};

/// SpectralState::from_problem(problem, grid).solution(t).
SolutionGrid spectral_solve(const CauchyProblem& problem, const PeriodicGrid& grid, double t);

}  // namespace wavecauchy

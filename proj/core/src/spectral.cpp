#include "wavecauchy/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

namespace wavecauchy {
namespace {

using cplx = std::complex<double>;

// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanDeleter {
  void operator()(fftw_plan_s* plan) const {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
};
using Plan = std::unique_ptr<fftw_plan_s, PlanDeleter>;

void transform(std::vector<cplx>& data, const PeriodicGrid& grid, int sign) {
  std::vector<int> dims(grid.n, grid.points);
  auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
  Plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.reset(fftw_plan_dft(grid.n, dims.data(), buffer, buffer, sign, FFTW_ESTIMATE));
  }
  if (!plan) throw EvaluationError("FFTW could not create a plan");
  fftw_execute(plan.get());
}

std::vector<cplx> sample(const ScalarField& f, const PeriodicGrid& grid) {
  std::vector<cplx> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto x = grid.node(i);
    const double v = f(x);
    if (!std::isfinite(v)) throw EvaluationError("initial data is not finite on the grid");
    out[i] = v;
  }
  return out;
}

double support_of(const ScalarField& f, const char* name) {
  if (f.support_radius) return *f.support_radius;
  if (f.periodic) return 0.0;
  throw DomainSizeError(std::string(name) + " has unbounded support and is not periodic; the spectral solver "
                        "would see wrap-around");
}

}  // namespace

std::size_t PeriodicGrid::size() const {
  std::size_t s = 1;
  for (int k = 0; k < n; ++k) s *= static_cast<std::size_t>(points);
  return s;
}

void PeriodicGrid::validate() const {
  Dimension{n};
  if (points < 2 || points % 2 != 0) throw DomainError("periodic grid needs an even number of points per axis");
  if (!(half_width > 0.0)) throw DomainError("periodic grid half width must be positive");
}

std::vector<double> PeriodicGrid::node(std::size_t flat) const {
  std::vector<double> x(n);
  const double dx = spacing();
  for (int k = n - 1; k >= 0; --k) {
    x[k] = -half_width + dx * static_cast<double>(flat % points);
    flat /= points;
  }
  return x;
}

std::size_t PeriodicGrid::index_of(std::span<const double> x) const {
  if (x.size() != static_cast<std::size_t>(n)) throw UsageError("point dimension does not match the grid");
  const double dx = spacing();
  std::size_t flat = 0;
  for (int k = 0; k < n; ++k) {
    const double j = (x[k] + half_width) / dx;
    const double r = std::round(j);
    if (std::abs(j - r) > 1e-9 || r < 0 || r >= points) {
      throw UsageError("point component " + std::to_string(x[k]) + " is not a grid node");
    }
    flat = flat * points + static_cast<std::size_t>(r);
  }
  return flat;
}

std::vector<double> PeriodicGrid::wavenumber(std::size_t flat) const {
  std::vector<double> k(n);
  const double base = std::numbers::pi / half_width;  // 2 pi / (2L)
  for (int a = n - 1; a >= 0; --a) {
    const long j = static_cast<long>(flat % points);
    flat /= points;
    k[a] = base * static_cast<double>(j < points / 2 ? j : j - points);
  }
  return k;
}

SpectralState SpectralState::from_problem(const CauchyProblem& problem, const PeriodicGrid& grid) {
  grid.validate();
  if (grid.n != problem.dim.n()) throw UsageError("grid dimension does not match the problem");
  const double support = std::max(support_of(problem.phi, "phi"), support_of(problem.psi, "psi"));
  if (!(grid.half_width > support)) {
    throw DomainSizeError("grid half width " + std::to_string(grid.half_width) + " does not exceed support radius " +
                          std::to_string(support));
  }
  SpectralState state(grid, support);
  state.phi_hat_ = sample(problem.phi, grid);
  state.psi_hat_ = sample(problem.psi, grid);
  transform(state.phi_hat_, grid, FFTW_FORWARD);
  transform(state.psi_hat_, grid, FFTW_FORWARD);
  state.wavenorm_.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto k = grid.wavenumber(i);
    double s = 0.0;
    for (double v : k) s += v * v;
    state.wavenorm_[i] = std::sqrt(s);
  }
  return state;
}

double SpectralState::hermitian_defect() const {
  const int N = grid_.points;
  double defect = 0.0, peak = 0.0;
  std::vector<int> idx(grid_.n);
  for (const auto* spectrum : {&phi_hat_, &psi_hat_}) {
    for (std::size_t flat = 0; flat < spectrum->size(); ++flat) {
      std::size_t rest = flat, mirror = 0;
      for (int a = grid_.n - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(rest % N);
        rest /= N;
      }
      for (int a = 0; a < grid_.n; ++a) mirror = mirror * N + static_cast<std::size_t>((N - idx[a]) % N);
      defect = std::max(defect, std::abs((*spectrum)[flat] - std::conj((*spectrum)[mirror])));
      peak = std::max(peak, std::abs((*spectrum)[flat]));
    }
  }
  return peak > 0.0 ? defect / peak : 0.0;
}

std::vector<std::complex<double>> SpectralState::u_hat(double t) const {
  std::vector<cplx> out(phi_hat_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double k = wavenorm_[i];
    // The zero mode takes the limit sin(t k)/k -> t.
    const double sinc = k > 0.0 ? std::sin(t * k) / k : t;
    out[i] = phi_hat_[i] * std::cos(t * k) + psi_hat_[i] * sinc;
  }
  return out;
}

std::vector<std::complex<double>> SpectralState::ut_hat(double t) const {
  std::vector<cplx> out(phi_hat_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double k = wavenorm_[i];
    out[i] = -phi_hat_[i] * (k * std::sin(t * k)) + psi_hat_[i] * std::cos(t * k);
  }
  return out;
}

double SpectralState::energy(double t) const {
  const auto u = u_hat(t);
  const auto ut = ut_hat(t);
  double e = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    e += std::norm(ut[i]) + wavenorm_[i] * wavenorm_[i] * std::norm(u[i]);
  }
  return e / static_cast<double>(u.size());
}

SolutionGrid SpectralState::solution(double t) const {
  if (!(t >= 0.0)) throw DomainError("time must be non-negative");
  if (!(grid_.half_width > support_radius_ + t)) {
    throw DomainSizeError("wrap-around guard violated: L = " + std::to_string(grid_.half_width) +
                          " must exceed support " + std::to_string(support_radius_) + " + t " + std::to_string(t));
  }
  auto u = u_hat(t);
  transform(u, grid_, FFTW_BACKWARD);
  SolutionGrid out;
  out.grid = grid_;
  out.t = t;
  out.values.resize(u.size());
  const double scale = 1.0 / static_cast<double>(u.size());
  double imag = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    out.values[i] = u[i].real() * scale;
    imag = std::max(imag, std::abs(u[i].imag() * scale));
  }
  out.error_estimate = imag;
  return out;
}

SolutionGrid spectral_solve(const CauchyProblem& problem, const PeriodicGrid& grid, double t) {
  return SpectralState::from_problem(problem, grid).solution(t);
}

}  // namespace wavecauchy

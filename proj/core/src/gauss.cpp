#include "wavecauchy/gauss.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include "wavecauchy/errors.hpp"

namespace wavecauchy {
namespace {

// Off-diagonal of the symmetric Jacobi matrix for the weight (1-x^2)^alpha.
double jacobi_offdiag(int k, double alpha) {
  // k = 1 cancels (2 alpha + 1) first, which is 0/0 at alpha = -1/2.
  if (k == 1) return std::sqrt(1.0 / (2.0 * alpha + 3.0));
  const double ka = k + alpha;
  return std::sqrt(k * (k + 2.0 * alpha) / (4.0 * ka * ka - 1.0));
}

double weight_mass(double alpha) {
  return std::sqrt(M_PI) * std::exp(std::lgamma(alpha + 1.0) - std::lgamma(alpha + 1.5));
}

// Orthonormal recurrence at x: returns p_N(x), p_N'(x) and sum_{k<N} p_k(x)^2.
struct RecurrenceValue {
  double p;
  double dp;
  double christoffel_sum;
};

RecurrenceValue evaluate(double x, int points, double alpha, double p0) {
  double p_prev = 0.0, p = p0;
  double dp_prev = 0.0, dp = 0.0;
  double sum = p * p;
  double b_prev = 0.0;
  for (int k = 0; k < points; ++k) {
    const double b = jacobi_offdiag(k + 1, alpha);
    const double p_next = (x * p - b_prev * p_prev) / b;
    const double dp_next = (p + x * dp - b_prev * dp_prev) / b;
    p_prev = p;
    dp_prev = dp;
    p = p_next;
    dp = dp_next;
    b_prev = b;
    if (k + 1 < points) sum += p * p;
  }
  return {p, dp, sum};
}

std::shared_ptr<const QuadratureRule> build(int points, double alpha) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(points);
  Eigen::VectorXd sub(std::max(points - 1, 0));
  for (int k = 1; k < points; ++k) sub[k - 1] = jacobi_offdiag(k, alpha);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw EvaluationError("Jacobi matrix eigenvalue iteration did not converge");
  }

  const double mass = weight_mass(alpha);
  const double p0 = 1.0 / std::sqrt(mass);
  auto rule = std::make_shared<QuadratureRule>();
  rule->nodes.resize(points);
  rule->weights.resize(points);
  for (int i = 0; i < points; ++i) {
    double x = solver.eigenvalues()[i];
    // Two Newton steps on p_N recover the last bits the eigensolver loses.
    for (int it = 0; it < 2; ++it) {
      const auto v = evaluate(x, points, alpha, p0);
      if (v.dp != 0.0) x -= v.p / v.dp;
    }
    rule->nodes[i] = x;
    rule->weights[i] = 1.0 / evaluate(x, points, alpha, p0).christoffel_sum;
  }
  // Symmetrize so odd moments vanish to rounding.
  for (int i = 0; i < points / 2; ++i) {
    const int j = points - 1 - i;
    const double x = 0.5 * (rule->nodes[j] - rule->nodes[i]);
    const double w = 0.5 * (rule->weights[i] + rule->weights[j]);
    rule->nodes[i] = -x;
    rule->nodes[j] = x;
    rule->weights[i] = rule->weights[j] = w;
  }
  if (points % 2 == 1) rule->nodes[points / 2] = 0.0;
  return rule;
}

}  // namespace

std::shared_ptr<const QuadratureRule> gauss_gegenbauer(int points, double alpha) {
  if (points < 1) throw DomainError("Gauss rule needs at least one node");
  if (!(alpha > -1.0)) throw DomainError("Gegenbauer exponent must exceed -1");

  static std::shared_mutex mutex;
  static std::map<std::pair<int, double>, std::shared_ptr<const QuadratureRule>> cache;
  const auto key = std::make_pair(points, alpha);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rule = build(points, alpha);
  std::unique_lock lock(mutex);
  return cache.emplace(key, std::move(rule)).first->second;
}

QuadratureRule gauss_legendre_on(int points, double a, double b) {
  const auto& base = *gauss_legendre(points);
  QuadratureRule out;
  out.nodes.resize(base.size());
  out.weights.resize(base.size());
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (std::size_t i = 0; i < base.size(); ++i) {
    out.nodes[i] = mid + half * base.nodes[i];
    out.weights[i] = half * base.weights[i];
  }
  return out;
}

}  // namespace wavecauchy

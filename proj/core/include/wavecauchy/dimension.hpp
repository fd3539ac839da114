#pragma once

#include <string>

#include "wavecauchy/errors.hpp"

namespace wavecauchy {

enum class Parity { odd, even };

/// Spatial dimension n of the Cauchy problem.
///
/// Valid for 1 <= n <= kMax. `half_order()` is the number of (1/t d/dt)
/// applications in the solution formulas: (n-3)/2 for odd n >= 3 and
/// (n-2)/2 for even n >= 2. It is undefined for n = 1, which only has the
/// d'Alembert formula.
class Dimension {
 public:
  static constexpr int kMax = 12;

  constexpr explicit Dimension(int n) : n_(n) {
    if (n < 1 || n > kMax) {
      throw DomainError("dimension must lie in 1.." + std::to_string(kMax) + ", got " +
                        std::to_string(n));
    }
  }

  constexpr int n() const noexcept { return n_; }
  constexpr Parity parity() const noexcept { return n_ % 2 == 0 ? Parity::even : Parity::odd; }
  constexpr bool odd() const noexcept { return n_ % 2 != 0; }
  constexpr bool even() const noexcept { return n_ % 2 == 0; }

  constexpr int half_order() const {
    if (n_ == 1) throw UsageError("n = 1 has no spherical-means order");
    return odd() ? (n_ - 3) / 2 : (n_ - 2) / 2;
  }

  friend constexpr bool operator==(Dimension, Dimension) = default;

 private:
  int n_;
};

}  // namespace wavecauchy

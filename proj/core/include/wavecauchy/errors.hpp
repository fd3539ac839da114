#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wavecauchy {

/// Argument outside the mathematical domain of an operation (n = 0, n > 12, R <= 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller combined inputs that do not fit together: wrong parity, dimension
/// mismatch between a field and a quadrature rule, unknown built-in.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A callable produced a non-finite value inside a quadrature.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The derivative stencil would sample at a non-positive radius or time.
class StencilError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Periodic grid too small for the requested data support and time.
class DomainSizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, std::vector<std::string> keys)
      : std::runtime_error(what), keys_(std::move(keys)) {}
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}

  /// Offending configuration keys, if the failure can be attributed to any.
  const std::vector<std::string>& keys() const noexcept { return keys_; }

 private:
  std::vector<std::string> keys_;
};

}  // namespace wavecauchy

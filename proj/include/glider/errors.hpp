#pragma once

#include <stdexcept>
#include <string>

namespace glider {

/// Raised when a parameter set violates its documented invariants. `field()`
/// names the offending parameter so configuration diagnostics can point at it.
class ValidationError : public std::invalid_argument {
public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

/// The search exhausted every reachable node without settling the goal.
class NoPathError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace glider

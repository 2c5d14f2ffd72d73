#pragma once

#include <stdexcept>
#include <string>

namespace ssav {

/// Raised when a 2-adic computation cannot be decided at the working
/// precision (elementary divisors outside {0, 1, inf}, failed top-bit lift).
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/// Input violates a structural requirement (e.g. W does not satisfy the
/// minimal polynomial of omega).
class InvalidModuleError : public std::invalid_argument {
 public:
  explicit InvalidModuleError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// A mathematical identity the library relies on failed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace ssav

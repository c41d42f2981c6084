#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dicke3 {

/// Argument outside the mathematical domain of an operation (negative
/// amplitude, evaluation beyond the exceptional point, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Rejected model inputs. `fields()` names every offending input.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::vector<std::string> fields, const std::string& message)
      : std::invalid_argument(message), fields_(std::move(fields)) {}

  const std::vector<std::string>& fields() const noexcept { return fields_; }

 private:
  std::vector<std::string> fields_;
};

/// A caller broke a documented precondition that is not a plain domain issue,
/// e.g. handing a non-Hermitian matrix to the symmetric ground-state solver.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact diagonalization would exceed the configured dimension limit.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& message, double best_tolerance = -1.0)
      : std::runtime_error(message), best_tolerance_(best_tolerance) {}

  /// Best cutoff-to-cutoff change reached before giving up, or a negative
  /// value when nothing was computed.
  double best_tolerance() const noexcept { return best_tolerance_; }

 private:
  double best_tolerance_;
};

/// An eigensolver failed to converge or reported a failure.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sweep plan exceeds its cell budget. Raised before any work is done.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dicke3

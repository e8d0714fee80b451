#pragma once

#include <stdexcept>
#include <string>

namespace paraqt {

/// Input violates a documented precondition (wrong length, non-unitary block, bad index, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured size limit (qubit count, crossing count, dimension).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterative eigensolver hit its iteration cap. Carries the best Ritz value seen.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

}  // namespace paraqt

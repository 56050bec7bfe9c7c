#pragma once

#include <stdexcept>
#include <string>

namespace circulant {

/// Malformed spec literal or a step set that cannot be canonicalized.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A tree count was requested for a graph with more than one component.
/// The count itself is zero; callers that report it should emit tau = 0.
class DisconnectedError : public std::domain_error {
 public:
  DisconnectedError(const std::string& what, long components)
      : std::domain_error(what), components_(components) {}
  long components() const noexcept { return components_; }

 private:
  long components_;
};

/// The exact oracle refuses graphs above its configured vertex ceiling.
class OracleCeilingError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Root refinement did not converge within the iteration budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A high-precision evaluation could not be certified as an exact integer
/// even at the maximum working precision.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact identity that is proven to hold did not. Never recoverable.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace circulant

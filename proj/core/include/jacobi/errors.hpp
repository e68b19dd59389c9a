#pragma once

#include <stdexcept>
#include <string>

namespace jacobi {

/// Malformed or inconsistent input (bad rational text, wrong list lengths).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input lies outside the domain where an exact procedure is complete,
/// e.g. repeated diagonal entries handed to the Hensel decision.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numeric root continuation could not certify a step.
class TrackingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jacobi

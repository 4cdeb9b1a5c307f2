#pragma once

#include <stdexcept>
#include <string>

namespace polysig {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed angle token or tuple text.
struct SyntaxError : Error {
  using Error::Error;
};

// Value outside the admissible domain (angle range, index range, bad input
// vector, hypothesis violation).
struct DomainError : Error {
  using Error::Error;
};

// Tuples mixing rational-pi and raw-radian angles.
struct MixedRepresentationError : Error {
  using Error::Error;
};

// Numerical failure (non-Hermitian input, eigenvalue straddling the
// tolerance, internal inconsistency).
struct NumericError : Error {
  using Error::Error;
};

}  // namespace polysig

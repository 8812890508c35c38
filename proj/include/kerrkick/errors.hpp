#pragma once

#include <stdexcept>
#include <string>

namespace kerrkick {

// Base for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidDimension : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// A numerical precondition or postcondition (Hermiticity, unitarity, trace) failed.
struct ContractViolation : Error {
  using Error::Error;
};

struct ConvergenceError : Error {
  using Error::Error;
};

// Closed-form amplitudes requested with |eps T| too small for the 1/(eps T) prefactors.
struct SingularCoupling : Error {
  using Error::Error;
};

struct DegenerateProjection : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace kerrkick

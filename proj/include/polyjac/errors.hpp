#pragma once

#include <stdexcept>

namespace polyjac {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shapes of the operands do not line up.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// A pivot fell below the singularity threshold.
struct SingularMatrix : Error {
  using Error::Error;
};

/// An entrywise power was requested outside its real domain.
struct DomainError : Error {
  using Error::Error;
};

/// An iteration exhausted its budget.
struct NoConvergence : Error {
  using Error::Error;
};

/// The system does not meet a method's structural requirements.
struct UnsupportedSystem : Error {
  using Error::Error;
};

/// A problem or solver description fails validation.
struct InvalidSpec : Error {
  using Error::Error;
};

/// The normalizing quantity of an estimator is numerically zero.
struct DegenerateNormalization : Error {
  using Error::Error;
};

}  // namespace polyjac

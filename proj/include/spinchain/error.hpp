#pragma once

#include <stdexcept>
#include <string>

namespace spinchain {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside a documented precondition (bad label, index, range, pairing).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Problem too large for the dense representation.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Steady state is not unique: the generator kernel has dimension != 1.
class DegeneracyError : public Error {
 public:
  DegeneracyError(const std::string& what, int dimension)
      : Error(what), dimension_(dimension) {}
  int dimension() const noexcept { return dimension_; }

 private:
  int dimension_;
};

/// Residual of the computed steady state above tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Time integration left the physical state space (trace drift, blow-up).
class StepSizeError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be real/Hermitian/positive is not, beyond roundoff.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Reading a config or writing results failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinchain

#pragma once

#include <stdexcept>
#include <string>

namespace orbhc {

// Base class of every error raised by the engine. The CLI maps the
// subclasses onto exit codes (see tools/orbhc.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A differential was assembled wrongly: d_out * d_in != 0.
class CompositionNotZero : public Error {
 public:
  using Error::Error;
};

// The averaging idempotent had a non-integral trace, so the matrices
// handed to invariant_dimension() were not a group representation.
class NonIntegralTrace : public Error {
 public:
  using Error::Error;
};

// A group closure or a complex block grew past its configured guard.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

// A precondition of a structural theorem does not hold for the input.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

// A matrix does not preserve the multiplication of a structure-constant
// algebra.
class NotAutomorphism : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagree.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Malformed user configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed argument to a library function (shape mismatch etc).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace orbhc

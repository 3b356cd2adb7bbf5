#pragma once

#include <stdexcept>

namespace bcx {

// Base type for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inversion (or division) on a zero divisor.
struct NullConeError : Error {
  using Error::Error;
};

// Hyperbolic square root of a value with a negative idempotent coefficient.
struct NegativeComponentError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct NotSquareError : Error {
  using Error::Error;
};

struct DegreeMismatchError : Error {
  using Error::Error;
};

// Argument (or a component of it) lies outside the open unit discus.
struct NotInDiscusError : Error {
  using Error::Error;
};

// Sampled self-map certification failed.
struct NotSelfMapError : Error {
  using Error::Error;
};

// Cayley transform evaluated at (or too near) its pole.
struct PoleAtOneError : Error {
  using Error::Error;
};

// Functional representer does not lie in the submodule it should represent on.
struct RepresenterError : Error {
  using Error::Error;
};

// Weight sequence violates beta(0) = 1 or strict positivity.
struct InvalidWeightError : Error {
  using Error::Error;
};

struct UnknownSuiteError : Error {
  using Error::Error;
};

struct InvalidConfigError : Error {
  using Error::Error;
};

// Malformed JSON input (syntax or schema).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace bcx

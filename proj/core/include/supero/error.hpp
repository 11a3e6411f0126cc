#pragma once

#include <stdexcept>
#include <string>

namespace supero {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not match (matrix columns, vector lengths, algebras).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Bad construction parameters: empty algebra, unsupported rank, odd form size.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Request outside what is implemented (e.g. natural module of an abstract algebra).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A span that should be a sub-superalgebra is not bracket-closed or not homogeneous.
class SubalgebraError : public Error {
 public:
  using Error::Error;
};

/// The torus does not act diagonally, so no weight decomposition exists in this basis.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

/// A mathematical consistency assertion failed (e.g. the differential image left
/// the cochain span). Signals a sign-convention bug; never recoverable.
class ConventionError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace supero

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace sdfp {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two block tuples (or a map and a tuple) do not share the same block sizes.
class StructureMismatch : public Error {
 public:
  using Error::Error;
};

/// A raw matrix argument has the wrong shape for its target block.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An argument required to be positive definite is not.
class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside its required domain (e.g. not on the spectraplex).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A nonzero tuple was required.
class ZeroVector : public Error {
 public:
  using Error::Error;
};

/// The segment [Py, Pu] has zero length: the step direction is undefined.
class DegenerateStep : public Error {
 public:
  using Error::Error;
};

/// Calibration bounds are inconsistent (lower bound >= upper bound).
class InvalidBounds : public Error {
 public:
  using Error::Error;
};

/// The homogenization variable vanished; the solution escapes to infinity.
class RayAtInfinity : public Error {
 public:
  using Error::Error;
};

/// A tolerance the algorithm relies on was violated at run time.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Malformed problem text. Carries the 1-based line of the offending token.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace sdfp

#pragma once

#include <stdexcept>
#include <string>

namespace orbiklt {

/// Base class for every error raised by the library. The CLI maps each
/// subclass to its own exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by an argument (out of range, non-coprime, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed input document or field.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The intersection form of a dual graph is not negative definite, so the
/// discrepancy system has no unique solution.
class NotNegativeDefinite : public Error {
 public:
  using Error::Error;
};

/// An operation was asked for a graph class it does not apply to.
class WrongClass : public Error {
 public:
  using Error::Error;
};

/// No closed formula is available for this input.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// The surface is not special; no abelianity verdict is claimed.
class NotSpecial : public Error {
 public:
  using Error::Error;
};

}  // namespace orbiklt

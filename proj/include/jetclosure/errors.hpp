#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jetclosure {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `position` is a zero-based byte offset into the
/// parsed string (or the line number for problem files).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), detail_(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

/// Operands live in different rings, fields, or monomial orders.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Arity, field or argument constraint violated by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A Groebner computation exceeded its degree bound or wall-clock budget.
/// The computation is inconclusive; no answer is implied.
class ResourceGuardExceeded : public Error {
 public:
  using Error::Error;
};

/// A local jet computation was requested for an ideal whose zero set
/// does not contain the origin.
class OriginNotOnVariety : public Error {
 public:
  using Error::Error;
};

/// The monomial-ideal oracle could not decide a question within its bounds.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (e.g. a certificate did not verify).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace jetclosure

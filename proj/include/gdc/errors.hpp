#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gdc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised for operations that are undefined on the zero polynomial
/// (leading term, initial form, omega-degree, homogenization).
class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// Input that violates an operation's precondition (non-homogeneous input to
/// gin, non-CI input to the depth check, inconsistent component sets, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Syntax error in the polynomial grammar or an ideal file. `offset` is the
/// 0-based byte offset inside the parsed text; line/column are 1-based and
/// only meaningful for file-level diagnostics.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0, std::size_t column = 0)
      : Error(what), offset_(offset), line_(line), column_(column) {}

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

class UnknownVariable : public ParseError {
 public:
  using ParseError::ParseError;
};

/// The reduction-step budget of a Groebner computation was exhausted.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A post-condition the library verifies internally did not hold. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gdc

// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewpbw {

enum class ErrorKind {
  Context,            // scalars or polynomials from different parameter contexts
  DivisionByZero,
  NotAUnit,
  EmptyPolynomial,
  Arity,              // generator index or generator count mismatch
  InvalidSystem,      // rule set is not a skew reduction system
  Precondition,
  Budget,             // exhaustive search exceeded its node cap
  Parse,
  VerdictRequired,    // quotient operation on a system that is not PBW
  Shape,              // not of 3-dimensional skew polynomial shape
  Indeterminate,      // symbolic branch predicate cannot be decided
  Argument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source location. Line and column are zero
/// when the error is not tied to a position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorKind::Parse, format(message, line, column)),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace skewpbw

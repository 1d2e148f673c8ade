// Copyright 2026 The maxplus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxplus {

/// Two operands (vectors, matrices, files) disagree on a dimension.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside the set where it is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The point already lies in the set, so there is nothing to approximate.
class AlreadyInsideError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// d(x, V) is +inf; the point's part does not meet V.
class InfiniteDistanceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A half-space was Everything or BottomOnly where a proper one is required.
class DegenerateHalfSpaceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Column `column` of B has no finite entry, so B# leaves R_max^n.
class AdmissibilityError : public DomainError {
 public:
  AdmissibilityError(std::size_t column, const std::string& what)
      : DomainError(what), column_(column) {}
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// A solver could not produce the requested answer (for example the
/// iteration cap was hit where a definite result is required).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Line and column are 1-based; 0 means "unknown".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0,
             const std::string& source = "")
      : std::runtime_error(format(message, line, column, source)),
        message_(message),
        source_(source),
        line_(line),
        column_(column) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }
  [[nodiscard]] const std::string& message() const noexcept { return message_; }
  [[nodiscard]] const std::string& source() const noexcept { return source_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column,
                            const std::string& source) {
    std::string where = source;
    if (line != 0) {
      if (!where.empty()) where += ":";
      where += std::to_string(line) + ":" + std::to_string(column);
    }
    return where.empty() ? message : where + ": " + message;
  }

  std::string message_;
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace maxplus

#pragma once

#include <stdexcept>
#include <string>

namespace caygen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands with incompatible degrees or malformed values.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An input violates a stated hypothesis (connectedness, minimum size, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured size bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A result failed its own post-condition check.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(format(message, line, column)), message_(message), line_(line), column_(column) {}

  /// The message without the position prefix.
  const std::string& message() const noexcept { return message_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    if (line <= 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  std::string message_;
  int line_;
  int column_;
};

/// Failure reading a file.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace caygen

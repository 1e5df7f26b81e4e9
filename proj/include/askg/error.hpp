#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace askg {

/// Base class for every domain failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (XML, Turtle, JSON, wire formats).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column = 0)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates a structural rule.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A caller broke an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Remote backend unreachable, timed out, or answered with an HTTP error.
class TransportError : public Error {
 public:
  TransportError(const std::string& message, int status = 0)
      : Error(message), status_(status) {}

  /// HTTP status of the last attempt, 0 when no response was received.
  int status() const noexcept { return status_; }

 private:
  int status_;
};

/// Remote backend answered, but the payload is unusable.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

}  // namespace askg

#pragma once

#include <stdexcept>
#include <string>

namespace nisub {

/// A structural precondition on an input was violated (wrong parent group,
/// subgroup outside its admissible range, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A resource bound (closure cap, enumeration cap) was exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction failed. Always a bug or a
/// corrupted input, never a user error.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed text input. Carries the 1-based position of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, size_t line, size_t column = 0)
      : std::runtime_error(format(message, line, column)), message_(message), line_(line), column_(column) {}

  /// The message without the position prefix.
  const std::string& message() const { return message_; }
  size_t line() const { return line_; }
  size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, size_t line, size_t column) {
    std::string where = "line " + std::to_string(line);
    if (column != 0) where += ", column " + std::to_string(column);
    return where + ": " + message;
  }

  std::string message_;
  size_t line_;
  size_t column_;
};

}  // namespace nisub

#pragma once

#include <stdexcept>
#include <string>

namespace cell600 {

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(format(what, line, column)), message_(what), line_(line), column_(column) {}

  /// The message without the position prefix.
  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line == 0 && column == 0) return what;
    if (line == 0) return "column " + std::to_string(column) + ": " + what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::string message_;
  int line_;
  int column_;
};

/// Well-formed input that breaks a catalog or graph invariant.
class InvariantError : public std::runtime_error {
 public:
  InvariantError(const std::string& what, int id)
      : std::runtime_error(what + " (ray " + std::to_string(id) + ")"), id_(id) {}

  int id() const { return id_; }

 private:
  int id_;
};

/// Fixed-width exact arithmetic left its representable range.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cell600

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autmin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown symbols, format violations, invalid covers.
/// Text-format errors carry a 1-based line and column; programmatic
/// misuse leaves both at 0.
class InputError : public Error {
 public:
  explicit InputError(const std::string& reason) : Error(reason) {}
  InputError(std::size_t line, std::size_t column, const std::string& reason)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + reason),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

/// An operation was applied to an automaton of the wrong acceptance mode.
class ModeError : public Error {
 public:
  using Error::Error;
};

/// A brute-force search was asked to exceed its configured budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace autmin

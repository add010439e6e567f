#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace editdiam {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text input that failed to parse; line and column are 1-based.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// The operation is undefined for this substitution (e.g. not primitive).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured memory or size cap would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace editdiam

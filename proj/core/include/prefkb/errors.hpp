#pragma once

#include <stdexcept>
#include <string>

namespace prefkb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed DSL text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Well-formed text that does not type-check against the signature, or a
/// grounding/evaluation request on undeclared symbols.
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// Invalid query or run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace prefkb

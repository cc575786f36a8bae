#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfdg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed a configured size or work bound.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// A subset or label lies outside the ground set it was used with.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DisjointnessError : public Error {
 public:
  using Error::Error;
};

class BijectionError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph: self-loop, parallel edge, unknown endpoint.
class GraphError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The graph violates a theorem's hypothesis (e.g. acyclicity).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Every alpha-omega cut has infinite capacity.
class UnboundedFlowError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hopfdg

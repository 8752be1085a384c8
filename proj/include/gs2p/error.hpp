#pragma once

#include <stdexcept>
#include <string>

namespace gs2p {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Tensor/graph shape violations. Message names the offending node or call.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// NaN or Inf produced during a forward pass. Message names the node.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Invalid configuration value or key.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A query id crossed a train/test or labeled/unlabeled boundary it must not.
class LeakageError : public Error {
 public:
  using Error::Error;
};

}  // namespace gs2p

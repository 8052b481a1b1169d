#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace waring {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (CLI exit code 2).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// The target form is not in the span of the requested powers.
class NoFit : public Error {
 public:
  using Error::Error;
};

// Two curves meet with multiplicity somewhere.
class NonTransversal : public Error {
 public:
  using Error::Error;
};

// A linear system of curves has a common component / positive-dimensional
// base locus.
class DegenerateSystem : public Error {
 public:
  using Error::Error;
};

// Iterative numerics failed to reach the requested residual.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

// Generic sampling ran out of attempts (CLI exit code 3). Retriable with a
// different seed or a larger budget.
class RetryExhausted : public Error {
 public:
  RetryExhausted(const std::string& what, std::vector<std::string> trace)
      : Error(what), trace_(std::move(trace)) {}
  const std::vector<std::string>& trace() const { return trace_; }

 private:
  std::vector<std::string> trace_;
};

// An invariant the algorithms rely on was observed to fail.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace waring

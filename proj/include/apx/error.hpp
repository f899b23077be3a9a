#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace apx {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs whose shapes do not agree (points of different dimension, etc.).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A randomized construction ran out of attempts. Carries the first violating
// subset (indices into the input) seen on the first attempt.
class ConstructionFailed : public Error {
 public:
  ConstructionFailed(const std::string& what, std::vector<std::size_t> subset)
      : Error(what), subset_(std::move(subset)) {}
  const std::vector<std::size_t>& subset() const noexcept { return subset_; }

 private:
  std::vector<std::size_t> subset_;
};

// An internal self-check failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace apx

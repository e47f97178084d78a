#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace widthlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Family or formula parameters outside their valid domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds an explicit size cap. Oracles never fall back to heuristics.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Input violates an operation precondition (e.g. set not independent).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed decomposition shape (not a tree, bad bag indices).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Quantity is undefined for the given input (bandwidth of a zero matrix).
class UndefinedValueError : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis does not hold, so the bound is not claimed.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace widthlab

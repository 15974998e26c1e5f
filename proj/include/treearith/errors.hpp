#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treearith {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed tree code. `position()` is the 0-based index of the first
/// offending character in the input string.
class DecodeError : public Error {
 public:
  DecodeError(std::size_t position, const std::string& msg)
      : Error("decode error at position " + std::to_string(position) + ": " + msg),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Syntax error in the expression language. 0-based character position.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& msg)
      : Error("parse error at position " + std::to_string(position) + ": " + msg),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A partial operation was applied outside its domain: subtraction without
/// containment, division without a factor, un-stretch of a multi-child root,
/// primality of the single-vertex tree, or an unsolvable equation.
class UndefinedOperation : public Error {
 public:
  using Error::Error;
};

/// An equation instance admits no tree solution.
class NoSolution : public UndefinedOperation {
 public:
  using UndefinedOperation::UndefinedOperation;
};

/// A configured cap was exceeded (family generation, result size).
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A value does not fit the requested fixed-width integer type.
class Overflow : public Error {
 public:
  using Error::Error;
};

}  // namespace treearith

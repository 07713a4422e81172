#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symk {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two operands live in different coefficient fields.
class FieldMismatchError : public Error {
 public:
  explicit FieldMismatchError(const std::string& what) : Error(what) {}
};

/// Division by an exact zero (field element, polynomial, or rational function).
class DivisionByZeroError : public Error {
 public:
  explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

/// Evaluation hit a zero denominator.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(what) {}
};

/// Evaluation is missing a value for some variable.
class IncompleteAssignmentError : public Error {
 public:
  explicit IncompleteAssignmentError(const std::string& what) : Error(what) {}
};

/// An operation's documented precondition was violated.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Syntax error with a 0-based character position into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A curve operation required a nonzero discriminant.
class SingularCurveError : public Error {
 public:
  explicit SingularCurveError(const std::string& what) : Error(what) {}
};

/// A truncated-ring element with zero constant term cannot be inverted.
class NonInvertibleError : public Error {
 public:
  explicit NonInvertibleError(const std::string& what) : Error(what) {}
};

/// The normal-form search exhausted its candidates without a witness.
class ClassificationError : public Error {
 public:
  explicit ClassificationError(const std::string& what) : Error(what) {}
};

/// An internal consistency assertion failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace symk

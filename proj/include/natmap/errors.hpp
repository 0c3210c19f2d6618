#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace natmap {

/// Base of every error raised by the library. Mathematical failures and
/// malformed input both derive from here; the CLI maps them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input (expression, presentation file, argument) is malformed.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Raised when a precondition of an operation is violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// arith

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("zero denominator") {}
};

class PoleAtPoint : public Error {
 public:
  explicit PoleAtPoint(const std::string& where) : Error("pole at " + where) {}
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("polynomial is not divisible by (t-1)") {}
};

class DuplicateNode : public Error {
 public:
  explicit DuplicateNode(const std::string& node)
      : Error("duplicate interpolation node " + node) {}
};

// pbw

class MixedPresentations : public Error {
 public:
  MixedPresentations(const std::string& a, const std::string& b)
      : Error("operands belong to different presentations: " + a + " vs " + b) {}
};

class InvalidPresentation : public InputError {
 public:
  using InputError::InputError;
};

// poisson

class NotCommutativeAtOne : public Error {
 public:
  using Error::Error;
};

class DivisionFailure : public Error {
 public:
  using Error::Error;
};

// limitmap

class PoleAtSample : public Error {
 public:
  using Error::Error;
};

class PoleAtOne : public Error {
 public:
  using Error::Error;
};

class InsufficientSamples : public Error {
 public:
  using Error::Error;
};

class InconsistentFamily : public Error {
 public:
  using Error::Error;
};

// cli

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        message_(message),
        position_(position) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

}  // namespace natmap

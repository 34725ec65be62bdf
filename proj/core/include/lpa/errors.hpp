#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands belong to different algebras.
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

// An operation received a multivector of the wrong grade.
class GradeError : public Error {
 public:
  using Error::Error;
};

// Input violates an operation's precondition (non-lightlike k, bad signature, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Rotor normalization R * reverse(R) == 1 does not hold.
class RotorNormError : public Error {
 public:
  using Error::Error;
};

// The exponential power series did not converge within the term cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Malformed multivector text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lpa

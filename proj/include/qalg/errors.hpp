#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qalg {

// Base class for every error raised by the library. Data-carrying errors
// (NonInvertible, NotSquarefree) live next to the types they reference.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Prime-field operands with different moduli were combined.
class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

// Algebra elements from different quotient algebras were combined.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class NotMonic : public Error {
 public:
  using Error::Error;
};

class NotIntegerMonic : public Error {
 public:
  using Error::Error;
};

// Exact-mode identity check called with deg q >= deg f.
class DegreeTooHigh : public Error {
 public:
  using Error::Error;
};

// A rational could not be mapped into F_p (denominator divisible by p).
class BadReduction : public Error {
 public:
  using Error::Error;
};

// The requested prime is unusable: composite, or divides disc(f).
class BadPrime : public Error {
 public:
  using Error::Error;
};

// The split-prime search hit its bound before finding enough primes.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " +
              message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qalg

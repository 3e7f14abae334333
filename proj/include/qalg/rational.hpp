#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "qalg/errors.hpp"

namespace qalg {

using BigInt = mpz_class;

// Exact arbitrary-precision fraction. Invariant: denominator > 0 and
// gcd(|numerator|, denominator) = 1, re-established after every operation,
// so equality is structural.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors literals
  Rational(const BigInt& n) : v_(n) {}

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  // Accepts "a" or "a/b" with optional leading sign, decimal digits only.
  static Rational from_string(const std::string& text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }

  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  // "a" when the value is an integer, "a/b" otherwise.
  std::string to_string() const { return v_.get_str(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;  // kept canonical by GMP's mpq arithmetic
};

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational scalar_from_int(long n, const Rational&) { return Rational(n); }

}  // namespace qalg

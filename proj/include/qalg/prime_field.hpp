#pragma once

#include <cstdint>
#include <string>

#include "qalg/errors.hpp"
#include "qalg/rational.hpp"

namespace qalg {

// Element of F_p. The modulus travels with the value and every binary
// operation insists both sides carry the same p. Moduli are desk-scale
// primes (at most a few million), so residues fit comfortably in int64.
class Fp {
 public:
  Fp(std::int64_t value, std::int64_t modulus) : p_(modulus) {
    if (modulus < 2) throw BadPrime("modulus must be >= 2");
    v_ = value % modulus;
    if (v_ < 0) v_ += modulus;
  }

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }

  Fp operator+(const Fp& o) const {
    check(o);
    std::int64_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return Fp(s, p_);
  }

  Fp operator-(const Fp& o) const {
    check(o);
    std::int64_t s = v_ - o.v_;
    if (s < 0) s += p_;
    return Fp(s, p_);
  }

  Fp operator*(const Fp& o) const {
    check(o);
    auto prod = static_cast<__int128>(v_) * o.v_;
    return Fp(static_cast<std::int64_t>(prod % p_), p_);
  }

  Fp operator/(const Fp& o) const { return *this * o.inverse(); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  // Extended Euclid; requires gcd(v, p) = 1, which holds for prime p.
  Fp inverse() const;

  Fp pow(std::uint64_t e) const;

  bool operator==(const Fp& o) const {
    check(o);
    return v_ == o.v_;
  }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  // Maps num/den into F_p; throws BadReduction when p divides den.
  static Fp reduce(const Rational& r, std::int64_t p);

  std::string to_string() const { return std::to_string(v_); }

 private:
  void check(const Fp& o) const {
    if (p_ != o.p_) {
      throw ModulusMismatch("mixed moduli " + std::to_string(p_) + " and " +
                            std::to_string(o.p_));
    }
  }

  std::int64_t v_;  // in [0, p)
  std::int64_t p_;
};

inline Fp zero_like(const Fp& x) { return Fp(0, x.modulus()); }
inline Fp one_like(const Fp& x) { return Fp(1, x.modulus()); }
inline Fp scalar_from_int(long n, const Fp& x) { return Fp(n, x.modulus()); }

}  // namespace qalg

#include "qalg/prime_field.hpp"

namespace qalg {

Fp Fp::inverse() const {
  if (v_ == 0) throw DivisionByZero("inverse of zero in F_p");
  // Extended Euclid on (v, p); p prime makes every nonzero residue a unit.
  std::int64_t r0 = v_, r1 = p_;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) {
    throw DivisionByZero("residue " + std::to_string(v_) +
                         " is not a unit mod " + std::to_string(p_));
  }
  return Fp(s0, p_);
}

Fp Fp::pow(std::uint64_t e) const {
  Fp result(1, p_);
  Fp base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Fp Fp::reduce(const Rational& r, std::int64_t p) {
  if (p < 2) throw BadPrime("modulus must be >= 2");
  auto up = static_cast<unsigned long>(p);
  // mpz_fdiv_ui yields the nonnegative floor remainder, also for negatives.
  std::int64_t num = static_cast<std::int64_t>(
      mpz_fdiv_ui(r.num().get_mpz_t(), up));
  std::int64_t den = static_cast<std::int64_t>(
      mpz_fdiv_ui(r.den().get_mpz_t(), up));
  if (den == 0) {
    throw BadReduction("denominator of " + r.to_string() +
                       " is divisible by " + std::to_string(p));
  }
  return Fp(num, p) * Fp(den, p).inverse();
}

}  // namespace qalg

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qalg/errors.hpp"
#include "qalg/prime_field.hpp"
#include "qalg/rational.hpp"

namespace qalg {

// Dense univariate polynomial over an exact scalar domain S (Rational, Fp,
// or AlgebraElement). Coefficients are indexed by degree and trailing zeros
// are always trimmed, so the representation is canonical: the zero
// polynomial is the empty sequence and degree() reports -1 for it (the
// "minus infinity" marker; it compares below every true degree).
//
// Scalars must provide +, -, *, ==, unary -, is_zero(), and the free
// functions zero_like/one_like/scalar_from_int. Division is needed only by
// the field-level algorithms (divrem, xgcd, resultant).
template <class S>
class Poly {
 public:
  Poly() = default;

  explicit Poly(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(const S& c) { return Poly(std::vector<S>{c}); }

  static Poly monomial(const S& c, std::size_t degree) {
    if (c.is_zero()) return Poly();
    std::vector<S> v(degree + 1, zero_like(c));
    v[degree] = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const S& leading() const {
    if (is_zero()) throw Error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  bool is_monic() const {
    return !is_zero() && leading() == one_like(leading());
  }

  // i must satisfy 0 <= i <= degree().
  const S& operator[](std::size_t i) const { return coeffs_[i]; }

  const std::vector<S>& coeffs() const { return coeffs_; }

  bool operator==(const Poly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!(coeffs_[i] == o.coeffs_[i])) return false;
    }
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<S> coeffs_;
};

template <class S>
Poly<S> operator-(const Poly<S>& a) {
  std::vector<S> v;
  v.reserve(a.coeffs().size());
  for (const S& c : a.coeffs()) v.push_back(-c);
  return Poly<S>(std::move(v));
}

template <class S>
Poly<S> operator+(const Poly<S>& a, const Poly<S>& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<S> v;
  v.reserve(std::max(x.size(), y.size()));
  std::size_t lo = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < lo; ++i) v.push_back(x[i] + y[i]);
  for (std::size_t i = lo; i < x.size(); ++i) v.push_back(x[i]);
  for (std::size_t i = lo; i < y.size(); ++i) v.push_back(y[i]);
  return Poly<S>(std::move(v));
}

template <class S>
Poly<S> operator-(const Poly<S>& a, const Poly<S>& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<S> v;
  v.reserve(std::max(x.size(), y.size()));
  std::size_t lo = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < lo; ++i) v.push_back(x[i] - y[i]);
  for (std::size_t i = lo; i < x.size(); ++i) v.push_back(x[i]);
  for (std::size_t i = lo; i < y.size(); ++i) v.push_back(-y[i]);
  return Poly<S>(std::move(v));
}

template <class S>
Poly<S> operator*(const Poly<S>& a, const Poly<S>& b) {
  if (a.is_zero() || b.is_zero()) return Poly<S>();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<S> v(x.size() + y.size() - 1, zero_like(x[0]));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      v[i + j] += x[i] * y[j];
    }
  }
  return Poly<S>(std::move(v));
}

template <class S>
Poly<S> operator*(const Poly<S>& a, const S& s) {
  if (s.is_zero()) return Poly<S>();
  std::vector<S> v;
  v.reserve(a.coeffs().size());
  for (const S& c : a.coeffs()) v.push_back(c * s);
  return Poly<S>(std::move(v));
}

template <class S>
Poly<S> scalar_divide(const Poly<S>& a, const S& s) {
  std::vector<S> v;
  v.reserve(a.coeffs().size());
  for (const S& c : a.coeffs()) v.push_back(c / s);
  return Poly<S>(std::move(v));
}

// Multiplies by X^k.
template <class S>
Poly<S> shift_up(const Poly<S>& a, std::size_t k) {
  if (a.is_zero() || k == 0) return a;
  std::vector<S> v(a.coeffs().size() + k, zero_like(a.coeffs()[0]));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) v[i + k] = a.coeffs()[i];
  return Poly<S>(std::move(v));
}

template <class S>
struct DivRemResult {
  Poly<S> quotient;
  Poly<S> remainder;
};

// Euclidean division: a = quotient * d + remainder, deg(remainder) < deg(d).
// Requires an invertible leading coefficient, which a field supplies.
template <class S>
DivRemResult<S> divrem(const Poly<S>& a, const Poly<S>& d) {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero() || a.degree() < d.degree()) return {Poly<S>(), a};

  std::vector<S> rem = a.coeffs();
  const S zero = zero_like(d.leading());
  std::vector<S> quot(static_cast<std::size_t>(a.degree() - d.degree()) + 1,
                      zero);
  const auto& dc = d.coeffs();
  auto deg_of = [&](const std::vector<S>& v) {
    int deg = static_cast<int>(v.size()) - 1;
    while (deg >= 0 && v[static_cast<std::size_t>(deg)].is_zero()) --deg;
    return deg;
  };
  int rdeg = deg_of(rem);
  const int ddeg = d.degree();
  while (rdeg >= ddeg) {
    std::size_t k = static_cast<std::size_t>(rdeg - ddeg);
    S c = rem[static_cast<std::size_t>(rdeg)] / d.leading();
    quot[k] = c;
    for (std::size_t i = 0; i < dc.size(); ++i) {
      rem[k + i] -= c * dc[i];
    }
    rdeg = deg_of(rem);
  }
  DivRemResult<S> result{Poly<S>(std::move(quot)), Poly<S>(std::move(rem))};
#ifndef NDEBUG
  if (!(result.quotient * d + result.remainder == a)) {
    throw Error("divrem self-check failed");
  }
#endif
  return result;
}

template <class S>
struct XgcdResult {
  Poly<S> g;  // monic gcd
  Poly<S> s;
  Poly<S> t;  // s*a + t*b = g
};

template <class S>
XgcdResult<S> xgcd(const Poly<S>& a, const Poly<S>& b) {
  if (a.is_zero() && b.is_zero()) {
    throw Error("xgcd of two zero polynomials");
  }
  Poly<S> r0 = a, r1 = b;
  const S one = one_like(a.is_zero() ? b.leading() : a.leading());
  Poly<S> s0 = Poly<S>::constant(one), s1;
  Poly<S> t0, t1 = Poly<S>::constant(one);
  while (!r1.is_zero()) {
    auto qr = divrem(r0, r1);
    Poly<S> s2 = s0 - qr.quotient * s1;
    Poly<S> t2 = t0 - qr.quotient * t1;
    r0 = r1;
    r1 = qr.remainder;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  const S lc = r0.leading();
  return {scalar_divide(r0, lc), scalar_divide(s0, lc), scalar_divide(t0, lc)};
}

template <class S>
Poly<S> gcd(const Poly<S>& a, const Poly<S>& b) {
  return xgcd(a, b).g;
}

template <class S>
Poly<S> derivative(const Poly<S>& a) {
  if (a.degree() < 1) return Poly<S>();
  std::vector<S> v;
  v.reserve(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    v.push_back(a.coeffs()[i] * scalar_from_int(static_cast<long>(i), a.coeffs()[i]));
  }
  return Poly<S>(std::move(v));
}

// Horner evaluation within a single scalar domain.
template <class S>
S eval(const Poly<S>& a, const S& x) {
  S acc = zero_like(x);
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    acc = acc * x + a.coeffs()[i];
  }
  return acc;
}

// Evaluation of a rational polynomial at a prime-field point: coefficients
// are reduced mod p on the fly (BadReduction if a denominator hits p).
inline Fp eval(const Poly<Rational>& a, const Fp& x) {
  Fp acc = zero_like(x);
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    acc = acc * x + Fp::reduce(a.coeffs()[i], x.modulus());
  }
  return acc;
}

inline Poly<Fp> reduce_mod_p(const Poly<Rational>& a, std::int64_t p) {
  std::vector<Fp> v;
  v.reserve(a.coeffs().size());
  for (const Rational& c : a.coeffs()) v.push_back(Fp::reduce(c, p));
  return Poly<Fp>(std::move(v));  // leading terms may vanish mod p
}

template <class S>
struct SquarefreeResult {
  bool squarefree;
  Poly<S> repeated_factor;  // monic witness of degree >= 1 when not squarefree
};

// f is squarefree over a characteristic-zero field iff gcd(f, f') = 1.
template <class S>
SquarefreeResult<S> squarefree_check(const Poly<S>& f) {
  if (f.is_zero()) throw Error("squarefree check on zero polynomial");
  if (f.degree() == 0) return {true, Poly<S>()};
  Poly<S> d = derivative(f);
  if (d.is_zero()) {
    // Only possible in positive characteristic; every root repeats.
    return {false, scalar_divide(f, f.leading())};
  }
  Poly<S> g = gcd(f, d);
  if (g.degree() == 0) return {true, Poly<S>()};
  return {false, g};
}

template <class S>
S scalar_pow(const S& base, std::size_t e) {
  S result = one_like(base);
  for (std::size_t i = 0; i < e; ++i) result = result * base;
  return result;
}

namespace detail {

// Pseudo-remainder: returns R with lc(d)^(deg a - deg d + 1) * a = Q*d + R.
template <class S>
Poly<S> pseudo_rem(const Poly<S>& a, const Poly<S>& d) {
  const S lead = d.leading();
  int e = a.degree() - d.degree() + 1;
  Poly<S> r = a;
  while (!r.is_zero() && r.degree() >= d.degree()) {
    Poly<S> s = shift_up(d * r.leading(),
                         static_cast<std::size_t>(r.degree() - d.degree()));
    r = r * lead - s;
    --e;
  }
  for (; e > 0; --e) r = r * lead;
  return r;
}

}  // namespace detail

// Resultant via the subresultant remainder sequence (Collins/Brown
// bookkeeping with the g, h coefficients), which keeps intermediate values
// as genuine subresultants instead of fraction towers.
template <class S>
S resultant(const Poly<S>& a, const Poly<S>& b) {
  if (a.is_zero() || b.is_zero()) {
    throw Error("resultant of a zero polynomial");
  }
  Poly<S> A = a, B = b;
  bool negate = false;
  if (A.degree() < B.degree()) {
    if ((A.degree() & 1) && (B.degree() & 1)) negate = !negate;
    std::swap(A, B);
  }
  const S one = one_like(A.leading());
  S g = one, h = one;
  while (B.degree() > 0) {
    const int delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) negate = !negate;
    Poly<S> r = detail::pseudo_rem(A, B);
    if (r.is_zero()) return zero_like(one);  // positive-degree common factor
    A = B;
    B = scalar_divide(r, g * scalar_pow(h, static_cast<std::size_t>(delta)));
    g = A.leading();
    if (delta > 0) {
      h = scalar_pow(g, static_cast<std::size_t>(delta)) /
          scalar_pow(h, static_cast<std::size_t>(delta - 1));
    }
  }
  if (A.degree() == 0) return negate ? -one : one;  // two constants
  S res = scalar_pow(B.leading(), static_cast<std::size_t>(A.degree())) /
          scalar_pow(h, static_cast<std::size_t>(A.degree() - 1));
  return negate ? -res : res;
}

// disc(f) = (-1)^(n(n-1)/2) * Res(f, f') for monic f.
inline Rational discriminant(const Poly<Rational>& f) {
  if (f.is_zero() || f.degree() < 1) {
    throw NotMonic("discriminant requires a monic polynomial of degree >= 1");
  }
  if (!f.is_monic()) throw NotMonic("discriminant requires a monic polynomial");
  const int n = f.degree();
  Rational res = resultant(f, derivative(f));
  return (n * (n - 1) / 2) % 2 == 0 ? res : -res;
}

// base^e mod m by square and multiply; test oracle and small-prime helper.
template <class S>
Poly<S> powmod(const Poly<S>& base, std::uint64_t e, const Poly<S>& m) {
  Poly<S> b = divrem(base, m).remainder;
  Poly<S> r = Poly<S>::constant(one_like(m.leading()));
  r = divrem(r, m).remainder;
  while (e > 0) {
    if (e & 1U) r = divrem(r * b, m).remainder;
    e >>= 1U;
    if (e > 0) b = divrem(b * b, m).remainder;
  }
  return r;
}

}  // namespace qalg

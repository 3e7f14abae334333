#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qalg/errors.hpp"
#include "qalg/matrix.hpp"
#include "qalg/poly.hpp"
#include "qalg/rational.hpp"

namespace qalg {

class AlgebraElement;

// The defining modulus f was not squarefree; carries the repeated factor.
class NotSquarefree : public Error {
 public:
  explicit NotSquarefree(Poly<Rational> witness, const std::string& message)
      : Error(message), witness_(std::move(witness)) {}

  const Poly<Rational>& witness() const { return witness_; }

 private:
  Poly<Rational> witness_;
};

// gcd(lift(a), f) was a proper factor of f; only reachable when f is
// reducible. Carries that factor as the witness.
class NonInvertible : public Error {
 public:
  explicit NonInvertible(Poly<Rational> witness, const std::string& message)
      : Error(message), witness_(std::move(witness)) {}

  const Poly<Rational>& witness() const { return witness_; }

 private:
  Poly<Rational> witness_;
};

// The quotient algebra E = Q[x]/f(x) for a monic squarefree f of degree
// n >= 1. Cheap to copy; elements hold one and combine only when their
// contexts agree (pointer identity or equal modulus).
class AlgebraContext {
 public:
  explicit AlgebraContext(Poly<Rational> f);

  int dimension() const { return data_->n; }
  const Poly<Rational>& modulus() const { return data_->f; }

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement generator() const;  // w, the class of x

  AlgebraElement embed(const Rational& r) const;
  AlgebraElement from_coords(std::vector<Rational> coords) const;
  AlgebraElement from_poly(const Poly<Rational>& p) const;  // reduces mod f

  bool same(const AlgebraContext& o) const {
    return data_ == o.data_ || data_->f == o.data_->f;
  }

 private:
  struct Data {
    Poly<Rational> f;
    int n;
  };
  std::shared_ptr<const Data> data_;
};

// Element of E stored as coordinates in the power basis 1, w, ..., w^(n-1).
class AlgebraElement {
 public:
  AlgebraElement(AlgebraContext ctx, std::vector<Rational> coords);

  const AlgebraContext& context() const { return ctx_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;

  // Canonical polynomial representative of degree < n.
  Poly<Rational> lift() const { return Poly<Rational>(coords_); }

  AlgebraElement operator-() const;
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator*(const Rational& s) const;

  AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }
  AlgebraElement& operator-=(const AlgebraElement& o) { return *this = *this - o; }
  AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

  // Throws DivisionByZero for 0 and NonInvertible when gcd(lift, f) is a
  // proper factor of f.
  AlgebraElement inverse() const;

  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

 private:
  const AlgebraContext& checked(const AlgebraElement& o) const;

  AlgebraContext ctx_;
  std::vector<Rational> coords_;
};

inline AlgebraElement zero_like(const AlgebraElement& x) {
  return x.context().zero();
}
inline AlgebraElement one_like(const AlgebraElement& x) {
  return x.context().one();
}
inline AlgebraElement scalar_from_int(long n, const AlgebraElement& x) {
  return x.context().embed(Rational(n));
}

// Horner evaluation of a rational polynomial at an algebra element.
AlgebraElement eval(const Poly<Rational>& a, const AlgebraElement& x);

// n x n matrix of multiplication by a in the power basis; column j holds
// the coordinates of a * w^j.
RationalMatrix regular_matrix(const AlgebraElement& a);

Rational trace(const AlgebraElement& a);

// Determinant of the regular representation.
Rational norm(const AlgebraElement& a);

// Gram matrix of the trace form: G[i][j] = Tr(w^(i+j)).
RationalMatrix gram_matrix(const AlgebraContext& ctx);

// Power sums p_0..p_k of the roots of f via Newton's identities on f's
// coefficients. Independent of the regular representation; the two must
// agree on Tr(w^k).
std::vector<Rational> trace_power_sums(const AlgebraContext& ctx,
                                       std::size_t k_max);

// The divided difference D(X, Y) = (f(X) - f(Y)) / (X - Y) specialized at
// Y = w: a polynomial in X of degree n-1 whose coefficients c_j(w) live in
// E. Satisfies (X - w) * D(X, w) = f(X) in E[X] and D(w, w) = f'(w).
using DividedDifference = Poly<AlgebraElement>;

DividedDifference divided_difference(const AlgebraContext& ctx);

}  // namespace qalg

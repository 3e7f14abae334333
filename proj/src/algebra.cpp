#include "qalg/algebra.hpp"

#include "qalg/polytext.hpp"

namespace qalg {

AlgebraContext::AlgebraContext(Poly<Rational> f) {
  if (f.is_zero() || f.degree() < 1 || !f.is_monic()) {
    throw NotMonic("f must be monic of degree >= 1");
  }
  auto sf = squarefree_check(f);
  if (!sf.squarefree) {
    throw NotSquarefree(sf.repeated_factor,
                        "f is not squarefree: repeated factor " +
                            print_poly(sf.repeated_factor));
  }
  int n = f.degree();
  data_ = std::make_shared<const Data>(Data{std::move(f), n});
}

AlgebraElement AlgebraContext::zero() const {
  return AlgebraElement(*this,
                        std::vector<Rational>(dimension(), Rational(0)));
}

AlgebraElement AlgebraContext::one() const { return embed(Rational(1)); }

AlgebraElement AlgebraContext::generator() const {
  return from_poly(Poly<Rational>::monomial(Rational(1), 1));
}

AlgebraElement AlgebraContext::embed(const Rational& r) const {
  std::vector<Rational> coords(dimension(), Rational(0));
  coords[0] = r;
  return AlgebraElement(*this, std::move(coords));
}

AlgebraElement AlgebraContext::from_coords(std::vector<Rational> coords) const {
  if (static_cast<int>(coords.size()) != dimension()) {
    throw Error("coordinate count must equal the algebra dimension");
  }
  return AlgebraElement(*this, std::move(coords));
}

AlgebraElement AlgebraContext::from_poly(const Poly<Rational>& p) const {
  Poly<Rational> r = divrem(p, modulus()).remainder;
  std::vector<Rational> coords(dimension(), Rational(0));
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) coords[i] = r[i];
  return AlgebraElement(*this, std::move(coords));
}

AlgebraElement::AlgebraElement(AlgebraContext ctx, std::vector<Rational> coords)
    : ctx_(std::move(ctx)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != ctx_.dimension()) {
    throw Error("coordinate count must equal the algebra dimension");
  }
}

const AlgebraContext& AlgebraElement::checked(const AlgebraElement& o) const {
  if (!ctx_.same(o.ctx_)) {
    throw ContextMismatch("elements belong to different quotient algebras");
  }
  return ctx_;
}

bool AlgebraElement::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool AlgebraElement::is_one() const { return *this == ctx_.one(); }

AlgebraElement AlgebraElement::operator-() const {
  std::vector<Rational> v;
  v.reserve(coords_.size());
  for (const auto& c : coords_) v.push_back(-c);
  return AlgebraElement(ctx_, std::move(v));
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  checked(o);
  std::vector<Rational> v;
  v.reserve(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    v.push_back(coords_[i] + o.coords_[i]);
  }
  return AlgebraElement(ctx_, std::move(v));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  checked(o);
  std::vector<Rational> v;
  v.reserve(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    v.push_back(coords_[i] - o.coords_[i]);
  }
  return AlgebraElement(ctx_, std::move(v));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  checked(o);
  return ctx_.from_poly(lift() * o.lift());
}

AlgebraElement AlgebraElement::operator*(const Rational& s) const {
  std::vector<Rational> v;
  v.reserve(coords_.size());
  for (const auto& c : coords_) v.push_back(c * s);
  return AlgebraElement(ctx_, std::move(v));
}

AlgebraElement AlgebraElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero algebra element");
  auto bezout = xgcd(lift(), ctx_.modulus());
  if (bezout.g.degree() > 0) {
    throw NonInvertible(bezout.g, "element is a zero divisor: gcd with f is " +
                                      print_poly(bezout.g));
  }
  // s * lift = 1 mod f once g is the constant 1.
  return ctx_.from_poly(bezout.s);
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  checked(o);
  return coords_ == o.coords_;
}

AlgebraElement eval(const Poly<Rational>& a, const AlgebraElement& x) {
  AlgebraElement acc = x.context().zero();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    acc = acc * x + x.context().embed(a.coeffs()[i]);
  }
  return acc;
}

RationalMatrix regular_matrix(const AlgebraElement& a) {
  const auto& ctx = a.context();
  const std::size_t n = static_cast<std::size_t>(ctx.dimension());
  RationalMatrix m(n, n);
  AlgebraElement w = ctx.generator();
  AlgebraElement column = a;  // a * w^j
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = column.coords()[i];
    if (j + 1 < n) column = column * w;
  }
  return m;
}

Rational trace(const AlgebraElement& a) {
  return regular_matrix(a).diagonal_sum();
}

Rational norm(const AlgebraElement& a) { return regular_matrix(a).det(); }

RationalMatrix gram_matrix(const AlgebraContext& ctx) {
  const std::size_t n = static_cast<std::size_t>(ctx.dimension());
  std::vector<Rational> traces;
  traces.reserve(2 * n - 1);
  AlgebraElement power = ctx.one();
  AlgebraElement w = ctx.generator();
  for (std::size_t k = 0; k + 1 < 2 * n; ++k) {
    traces.push_back(trace(power));
    if (k + 2 < 2 * n) power = power * w;
  }
  RationalMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.at(i, j) = traces[i + j];
  }
  return g;
}

std::vector<Rational> trace_power_sums(const AlgebraContext& ctx,
                                       std::size_t k_max) {
  const int n = ctx.dimension();
  const auto& f = ctx.modulus();
  auto coeff = [&](int i) { return f[static_cast<std::size_t>(i)]; };
  std::vector<Rational> p;
  p.reserve(k_max + 1);
  p.push_back(Rational(n));
  // Newton's identities for monic f:
  //   k <= n:  p_k = -(sum_{i=1}^{k-1} a_{n-i} p_{k-i} + k a_{n-k})
  //   k  > n:  p_k = - sum_{i=1}^{n}   a_{n-i} p_{k-i}
  for (std::size_t k = 1; k <= k_max; ++k) {
    Rational acc(0);
    if (k <= static_cast<std::size_t>(n)) {
      for (std::size_t i = 1; i < k; ++i) {
        acc += coeff(n - static_cast<int>(i)) * p[k - i];
      }
      acc += coeff(n - static_cast<int>(k)) * Rational(static_cast<long>(k));
    } else {
      for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) {
        acc += coeff(n - static_cast<int>(i)) * p[k - i];
      }
    }
    p.push_back(-acc);
  }
  return p;
}

DividedDifference divided_difference(const AlgebraContext& ctx) {
  const int n = ctx.dimension();
  const auto& f = ctx.modulus();
  // Synthetic division of f(X) by (X - Y) with Y mapped to w as we go:
  // c_{n-1} = 1 and c_{j} = f_{j+1} + w * c_{j+1}.
  AlgebraElement w = ctx.generator();
  std::vector<AlgebraElement> c(static_cast<std::size_t>(n), ctx.zero());
  c[static_cast<std::size_t>(n - 1)] = ctx.one();
  for (int j = n - 2; j >= 0; --j) {
    c[static_cast<std::size_t>(j)] =
        ctx.embed(f[static_cast<std::size_t>(j + 1)]) +
        w * c[static_cast<std::size_t>(j + 1)];
  }
  return DividedDifference(std::move(c));
}

}  // namespace qalg

#include "qalg/matrix.hpp"

#include "qalg/errors.hpp"

namespace qalg {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

bool RationalMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

Rational RationalMatrix::diagonal_sum() const {
  Rational sum(0);
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) sum += at(i, i);
  return sum;
}

Rational RationalMatrix::det() const {
  if (rows_ != cols_) throw Error("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return Rational(1);
  RationalMatrix m = *this;
  bool negate = false;
  Rational prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return Rational(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      negate = !negate;
    }
    // Bareiss step: every entry stays a (k+1)x(k+1) minor of the input,
    // so integer matrices never leave the integers.
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
    }
    prev = m.at(k, k);
  }
  Rational result = m.at(n - 1, n - 1);
  return negate ? -result : result;
}

}  // namespace qalg

#pragma once

#include <cstddef>
#include <vector>

#include "qalg/rational.hpp"

namespace qalg {

// Dense rectangular matrix of exact rationals. Row-major storage.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

  bool is_identity() const;
  bool is_symmetric() const;

  Rational diagonal_sum() const;

  // Exact determinant by fraction-free (Bareiss) elimination with row
  // swaps on zero pivots. Square matrices only.
  Rational det() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

}  // namespace qalg

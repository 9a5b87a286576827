#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "permorb/arith.hpp"

namespace permorb {

/// Dense row-major matrix over an exact ring (Integer or Rational).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const T& factor);
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const T& factor);
  void negate_row(std::size_t r);

  Matrix transpose() const;
  std::vector<T> apply(const std::vector<T>& v) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);

/// Exact determinant (fraction-free Bareiss elimination for Integer input).
Integer determinant(const IntMatrix& m);

/// Leading principal minors det(m[0..k, 0..k]) for k = 1..n.
std::vector<Integer> leading_principal_minors(const IntMatrix& m);

/// Inverse over the rationals; the caller guarantees m is nonsingular.
RatMatrix rational_inverse(const IntMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

}  // namespace permorb

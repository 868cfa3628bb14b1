/*
   Copyright 2026 The delsarte authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DELSARTE_MATRIX_HPP
#define DELSARTE_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "delsarte/number.hpp"

namespace delsarte {

/// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<T>& data() const noexcept { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using RealMatrix = Matrix<double>;

/// Rank over the rationals (Gaussian elimination, exact).
std::size_t rank(RatMatrix m);

/// Rank over the rationals of a family of integer row vectors (fraction-free elimination).
std::size_t rank_of_rows(std::vector<std::vector<Integer>> rows);

/// Solves a square non-singular system exactly; nullopt when singular.
std::optional<std::vector<Rational>> solve(RatMatrix a, std::vector<Rational> b);

std::optional<RatMatrix> inverse(const RatMatrix& a);

RealMatrix to_real(const RatMatrix& m);

/// Incrementally maintained row-echelon basis over Q. Used to compute ranks of
/// streams of rows without materialising the whole matrix.
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  /// Returns true if the row enlarged the span.
  bool insert(std::span<const Rational> row);
  bool contains(std::span<const Rational> row) const;
  std::size_t dimension() const noexcept { return basis_.size(); }

 private:
  std::vector<Rational> reduce(std::span<const Rational> row) const;

  std::size_t width_;
  std::vector<std::vector<Rational>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace delsarte

#endif  // DELSARTE_MATRIX_HPP

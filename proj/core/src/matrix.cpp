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

#include "delsarte/matrix.hpp"

#include <utility>

namespace delsarte {

std::size_t rank(RatMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t rank_of_rows(std::vector<std::vector<Integer>> rows) {
  // Bareiss-style elimination keeps entries integral.
  if (rows.empty()) return 0;
  const std::size_t width = rows.front().size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    const Integer p = rows[r][c];
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const Integer f = rows[i][c];
      for (std::size_t j = c; j < width; ++j) {
        Integer v = p * rows[i][j] - f * rows[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        rows[i][j] = std::move(v);
      }
    }
    prev = p;
    ++r;
  }
  return r;
}

std::optional<std::vector<Rational>> solve(RatMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(c, j));
      std::swap(b[pivot], b[c]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a(i, i);
  return b;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  const std::size_t n = a.rows();
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(c, j));
        std::swap(inv(pivot, j), inv(c, j));
      }
    const Rational d = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= d;
      inv(c, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RealMatrix to_real(const RatMatrix& m) {
  RealMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).get_d();
  return r;
}

std::vector<Rational> RowSpace::reduce(std::span<const Rational> row) const {
  std::vector<Rational> v(row.begin(), row.end());
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const std::size_t c = pivots_[b];
    if (v[c] == 0) continue;
    const Rational f = v[c];  // basis rows are normalised to 1 at the pivot
    for (std::size_t j = c; j < width_; ++j) v[j] -= f * basis_[b][j];
  }
  return v;
}

bool RowSpace::insert(std::span<const Rational> row) {
  std::vector<Rational> v = reduce(row);
  std::size_t c = 0;
  while (c < width_ && v[c] == 0) ++c;
  if (c == width_) return false;
  const Rational lead = v[c];
  for (std::size_t j = c; j < width_; ++j) v[j] /= lead;
  // keep the basis fully reduced so reduce() can go in one pass
  for (auto& b : basis_) {
    if (b[c] == 0) continue;
    const Rational f = b[c];
    for (std::size_t j = c; j < width_; ++j) b[j] -= f * v[j];
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(c);
  return true;
}

bool RowSpace::contains(std::span<const Rational> row) const {
  const auto v = reduce(row);
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace delsarte

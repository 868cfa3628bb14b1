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


#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace oracle {

Table hamming(int n, int q) {
  Table t;
  t.n = 1;
  for (int i = 0; i < n; ++i) t.n *= q;
  t.d = n;
  t.rel.resize(static_cast<std::size_t>(t.n) * t.n);
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) {
      int a = x, b = y, dist = 0;
      for (int i = 0; i < n; ++i) {
        dist += (a % q) != (b % q);
        a /= q;
        b /= q;
      }
      t.rel[static_cast<std::size_t>(x) * t.n + y] = dist;
    }
  return t;
}

Table johnson(int v, int k, std::vector<std::uint64_t>* masks) {
  std::vector<std::uint64_t> m;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << v); ++s)
    if (std::popcount(s) == k) m.push_back(s);
  Table t;
  t.n = static_cast<int>(m.size());
  t.d = std::min(k, v - k);
  t.rel.resize(static_cast<std::size_t>(t.n) * t.n);
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) t.rel[static_cast<std::size_t>(x) * t.n + y] = k - std::popcount(m[x] & m[y]);
  if (masks) *masks = m;
  return t;
}

std::vector<long> intersection_numbers(const Table& t) {
  const int m = t.d + 1;
  std::vector<long> p(static_cast<std::size_t>(m) * m * m, -1);
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) {
      std::vector<long> c(static_cast<std::size_t>(m) * m, 0);
      for (int z = 0; z < t.n; ++z) ++c[t(x, z) * m + t(z, y)];
      const int k = t(x, y);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          long& slot = p[(static_cast<std::size_t>(i) * m + j) * m + k];
          if (slot < 0) slot = c[i * m + j];
          else if (slot != c[i * m + j]) return {};
        }
    }
  return p;
}

std::vector<long> pair_counts(const Table& t, const std::vector<int>& subset) {
  std::vector<long> c(t.d + 1, 0);
  for (int x : subset)
    for (int y : subset) ++c[t(x, y)];
  return c;
}

std::vector<std::vector<long>> outer(const Table& t, const std::vector<int>& subset) {
  std::vector<std::vector<long>> B(t.n, std::vector<long>(t.d + 1, 0));
  for (int x = 0; x < t.n; ++x)
    for (int y : subset) ++B[x][t(x, y)];
  return B;
}

bool completely_regular(const Table& t, const std::vector<int>& subset) {
  const auto B = outer(t, subset);
  std::vector<int> first(t.d + 1, -1);
  for (int x = 0; x < t.n; ++x) {
    int dist = 0;
    while (B[x][dist] == 0) ++dist;
    if (first[dist] < 0) first[dist] = x;
    else if (B[x] != B[first[dist]]) return false;
  }
  return true;
}

std::vector<Eigen::MatrixXd> idempotents(const Table& t, const std::vector<double>& theta) {
  Eigen::MatrixXd A1 = Eigen::MatrixXd::Zero(t.n, t.n);
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) A1(x, y) = t(x, y) == 1;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A1);
  std::vector<Eigen::MatrixXd> E(theta.size(), Eigen::MatrixXd::Zero(t.n, t.n));
  for (int c = 0; c < t.n; ++c) {
    const double lambda = es.eigenvalues()(c);
    std::size_t best = 0;
    for (std::size_t j = 1; j < theta.size(); ++j)
      if (std::abs(theta[j] - lambda) < std::abs(theta[best] - lambda)) best = j;
    const Eigen::VectorXd u = es.eigenvectors().col(c);
    E[best] += u * u.transpose();
  }
  return E;
}

std::vector<double> hamming_theta(int n, int q) {
  std::vector<double> th;
  for (int j = 0; j <= n; ++j) th.push_back(static_cast<double>(n * (q - 1) - q * j));
  return th;
}

std::vector<double> johnson_theta(int v, int k) {
  std::vector<double> th;
  for (int j = 0; j <= std::min(k, v - k); ++j) th.push_back(static_cast<double>((k - j) * (v - k - j) - j));
  return th;
}

Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& E) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(E);
  std::vector<int> cols;
  for (int c = 0; c < E.rows(); ++c)
    if (es.eigenvalues()(c) > 0.5) cols.push_back(c);
  Eigen::MatrixXd S(E.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) S.col(static_cast<Eigen::Index>(i)) = es.eigenvectors().col(cols[i]);
  return S;
}

std::vector<int> random_subset(std::mt19937_64& rng, int n, int size) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace oracle

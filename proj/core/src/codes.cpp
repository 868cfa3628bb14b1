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


#include "delsarte/codes.hpp"

#include <algorithm>
#include <bit>

#include "delsarte/errors.hpp"

namespace delsarte {

BinaryLinearCode::BinaryLinearCode(int length, const std::vector<std::uint64_t>& generators) : n_(length) {
  if (length < 1 || length > 63) fail(ErrorCode::parameter_out_of_range, "binary code length must be 1..63");
  const std::uint64_t mask = (std::uint64_t{1} << length) - 1;
  for (std::uint64_t g : generators) {
    if (g & ~mask) fail(ErrorCode::invalid_input, "generator longer than the code length");
    g = reduce(g);
    if (g == 0) continue;
    const int p = 63 - std::countl_zero(g);
    for (auto& b : basis_)
      if ((b >> p) & 1) b ^= g;
    basis_.push_back(g);
    pivots_.push_back(p);
  }
  // Order rows by descending pivot for a canonical presentation.
  std::vector<std::size_t> idx(basis_.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
  std::vector<std::uint64_t> nb;
  std::vector<int> np;
  for (auto i : idx) {
    nb.push_back(basis_[i]);
    np.push_back(pivots_[i]);
  }
  basis_ = std::move(nb);
  pivots_ = std::move(np);
}

Vertex BinaryLinearCode::reduce(Vertex x) const {
  for (std::size_t r = 0; r < basis_.size(); ++r)
    if ((x >> pivots_[r]) & 1) x ^= basis_[r];
  return x;
}

std::vector<Vertex> BinaryLinearCode::codewords() const {
  std::vector<Vertex> out;
  out.reserve(size());
  Vertex w = 0;
  out.push_back(0);
  for (std::uint64_t g = 1; g < size(); ++g) {
    w ^= basis_[std::countr_zero(g)];  // Gray code walk
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> BinaryLinearCode::coset_representatives() const {
  std::vector<int> free;
  for (int b = 0; b < n_; ++b)
    if (std::find(pivots_.begin(), pivots_.end(), b) == pivots_.end()) free.push_back(b);
  std::vector<Vertex> out;
  out.reserve(std::size_t{1} << free.size());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << free.size()); ++m) {
    Vertex x = 0;
    for (std::size_t i = 0; i < free.size(); ++i)
      if ((m >> i) & 1) x |= Vertex{1} << free[i];
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BinaryLinearCode BinaryLinearCode::dual() const {
  std::vector<std::uint64_t> gens;
  for (int f = 0; f < n_; ++f) {
    if (std::find(pivots_.begin(), pivots_.end(), f) != pivots_.end()) continue;
    std::uint64_t h = std::uint64_t{1} << f;
    for (std::size_t r = 0; r < basis_.size(); ++r)
      if ((basis_[r] >> f) & 1) h |= std::uint64_t{1} << pivots_[r];
    gens.push_back(h);
  }
  return BinaryLinearCode(n_, gens);
}

BinaryLinearCode golay23() {
  // Letter c of a word is bit 22-c; the shift x^i g(x) sets letters i+e.
  const int exps[] = {0, 2, 4, 5, 6, 10, 11};
  std::vector<std::uint64_t> gens;
  for (int i = 0; i < 12; ++i) {
    std::uint64_t w = 0;
    for (int e : exps) w |= std::uint64_t{1} << (22 - (i + e));
    gens.push_back(w);
  }
  return BinaryLinearCode(23, gens);
}

BinaryLinearCode extend_by_parity(const BinaryLinearCode& code) {
  std::vector<std::uint64_t> gens;
  for (auto b : code.basis()) gens.push_back((b << 1) | static_cast<std::uint64_t>(std::popcount(b) & 1));
  return BinaryLinearCode(code.length() + 1, gens);
}

BinaryLinearCode golay24() { return extend_by_parity(golay23()); }

BinaryLinearCode hamming_code(int m) {
  if (m < 2 || m > 6) fail(ErrorCode::parameter_out_of_range, "Hamming code needs 2 <= m <= 6");
  const int n = (1 << m) - 1;
  // Simplex code: row b has letter c set when bit b of (c+1) is set.
  std::vector<std::uint64_t> rows;
  for (int b = 0; b < m; ++b) {
    std::uint64_t w = 0;
    for (int c = 0; c < n; ++c)
      if (((c + 1) >> b) & 1) w |= std::uint64_t{1} << (n - 1 - c);
    rows.push_back(w);
  }
  return BinaryLinearCode(n, rows).dual();
}

BinaryLinearCode extended_hamming_code(int m) { return extend_by_parity(hamming_code(m)); }

BinaryLinearCode two_by_two_code(int n) {
  if (n < 2 || 2 * n > 63) fail(ErrorCode::parameter_out_of_range, "two_by_two_code needs 2 <= n <= 31");
  const int len = 2 * n;
  const std::uint64_t first = std::uint64_t{1} << (len - 1);
  const std::uint64_t rest = first - 1;
  return BinaryLinearCode(len, {first, rest});
}

BinaryLinearCode append_free_bit(const BinaryLinearCode& code) {
  std::vector<std::uint64_t> gens;
  for (auto b : code.basis()) gens.push_back(b << 1);
  gens.push_back(1);
  return BinaryLinearCode(code.length() + 1, gens);
}

std::string word_to_string(Vertex x, int n) {
  std::string s(n, '0');
  for (int c = 0; c < n; ++c)
    if ((x >> (n - 1 - c)) & 1) s[c] = '1';
  return s;
}

}  // namespace delsarte

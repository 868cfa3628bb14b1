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


#include "delsarte/named_schemes.hpp"

#include <array>
#include <bit>

#include "delsarte/errors.hpp"

namespace delsarte {

namespace {

constexpr int kMaxJohnsonV = 64;

/// C(n, r) for n <= 64 in 64 bits; C(64, 32) < 2^63.
const std::array<std::array<std::uint64_t, kMaxJohnsonV + 1>, kMaxJohnsonV + 1>& small_binomials() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kMaxJohnsonV + 1>, kMaxJohnsonV + 1> t{};
    for (int n = 0; n <= kMaxJohnsonV; ++n) {
      t[n][0] = 1;
      for (int r = 1; r <= n; ++r) t[n][r] = t[n - 1][r - 1] + (r <= n - 1 ? t[n - 1][r] : 0);
    }
    return t;
  }();
  return table;
}

std::uint64_t cbin(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  return small_binomials()[n][r];
}

IntersectionNumbers to_intersection_numbers(const Eigensystem& e, std::uint64_t nv) {
  // p_ij^k = (1/|X|) sum_l Q_kl P_li P_lj. P is integral; Q is scaled by the
  // lcm of its denominators (Johnson Q has fractions).
  const int d = static_cast<int>(e.P.rows()) - 1;
  Integer den = 1;
  for (int r = 0; r <= d; ++r)
    for (int c = 0; c <= d; ++c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.Q(r, c).get_den_mpz_t());
  std::vector<Integer> P((d + 1) * (d + 1)), Q((d + 1) * (d + 1));
  for (int r = 0; r <= d; ++r)
    for (int c = 0; c <= d; ++c) {
      P[r * (d + 1) + c] = e.P(r, c).get_num();
      Q[r * (d + 1) + c] = e.Q(r, c).get_num() * (den / e.Q(r, c).get_den());
    }
  const Integer X = Integer(std::to_string(nv)) * den;
  IntersectionNumbers p(d);
  Integer acc, term;
  for (int i = 0; i <= d; ++i)
    for (int j = i; j <= d; ++j)
      for (int k = 0; k <= d; ++k) {
        acc = 0;
        for (int l = 0; l <= d; ++l) {
          term = P[l * (d + 1) + i] * P[l * (d + 1) + j];
          acc += term * Q[k * (d + 1) + l];
        }
        if (!mpz_divisible_p(acc.get_mpz_t(), X.get_mpz_t()) || acc < 0)
          fail(ErrorCode::inconsistent_intersection_number,
               "non-integral intersection number p[" + std::to_string(i) + "][" + std::to_string(j) +
                   "][" + std::to_string(k) + "]");
        acc /= X;
        p.at(i, j, k) = p.at(j, i, k) = to_int64(acc);
      }
  return p;
}

}  // namespace

Integer krawtchouk(int n, int q, int k, int i) {
  if (n < 0 || q < 2 || k < 0 || k > n || i < 0 || i > n)
    fail(ErrorCode::parameter_out_of_range, "krawtchouk index out of range");
  Integer sum = 0;
  for (int j = 0; j <= k; ++j) {
    Integer term = binomial(i, j) * binomial(n - i, k - j) * power(Integer(q - 1), k - j);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

Integer eberlein(int v, int k, int i, int j) {
  if (k < 0 || 2 * k > v || i < 0 || i > k || j < 0 || j > k)
    fail(ErrorCode::parameter_out_of_range, "eberlein index out of range");
  Integer sum = 0;
  for (int h = 0; h <= i; ++h) {
    Integer term = binomial(j, h) * binomial(k - j, i - h) * binomial(v - k - j, i - h);
    if (h % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

AssociationScheme build_hamming(int n, int q) {
  if (n < 1 || q < 2) fail(ErrorCode::parameter_out_of_range, "H(n,q) needs n >= 1 and q >= 2");
  if (power(Integer(q), n) > Integer("9223372036854775807"))
    fail(ErrorCode::parameter_out_of_range, "H(n,q) needs q^n < 2^63");
  AssociationScheme s;
  s.d_ = n;
  s.num_vertices_ = to_int64(power(Integer(q), n));
  s.family_ = Family::hamming;
  s.param_a_ = n;
  s.param_b_ = q;
  RatMatrix P(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) P(i, j) = krawtchouk(n, q, j, i);
  s.eigen_ = eigensystem_from_exact(std::move(P), s.num_vertices_);
  s.p_ = to_intersection_numbers(s.eigen_, s.num_vertices_);
  s.valencies_ = s.p_.valencies();
  s.finish_spectral();
  return s;
}

AssociationScheme build_johnson(int v, int k) {
  if (k < 1 || 2 * k > v || v > kMaxJohnsonV)
    fail(ErrorCode::parameter_out_of_range, "J(v,k) needs 1 <= k, 2k <= v <= 64");
  AssociationScheme s;
  s.d_ = k;
  s.num_vertices_ = cbin(v, k);
  s.family_ = Family::johnson;
  s.param_a_ = v;
  s.param_b_ = k;
  RatMatrix P(k + 1, k + 1);
  for (int j = 0; j <= k; ++j)
    for (int i = 0; i <= k; ++i) P(j, i) = eberlein(v, k, i, j);
  s.eigen_ = eigensystem_from_exact(std::move(P), s.num_vertices_);
  s.p_ = to_intersection_numbers(s.eigen_, s.num_vertices_);
  s.valencies_ = s.p_.valencies();
  s.finish_spectral();
  return s;
}

AssociationScheme build_named(const NamedSchemeSpec& spec) {
  switch (spec.family) {
    case Family::hamming: return build_hamming(spec.first, spec.second);
    case Family::johnson: return build_johnson(spec.first, spec.second);
    default: fail(ErrorCode::invalid_input, "not a named family");
  }
}

Vertex hamming_vertex(const std::vector<int>& digits, int q) {
  Vertex x = 0;
  for (int c : digits) {
    if (c < 0 || c >= q) fail(ErrorCode::invalid_input, "letter outside the alphabet");
    x = x * static_cast<Vertex>(q) + static_cast<Vertex>(c);
  }
  return x;
}

std::vector<int> hamming_digits(Vertex x, int n, int q) {
  std::vector<int> out(n);
  for (int i = n - 1; i >= 0; --i) {
    out[i] = static_cast<int>(x % static_cast<Vertex>(q));
    x /= static_cast<Vertex>(q);
  }
  return out;
}

std::uint64_t johnson_rank(int v, int k, std::uint64_t mask) {
  if (std::popcount(mask) != k || (v < 64 && (mask >> v) != 0))
    fail(ErrorCode::invalid_input, "not a " + std::to_string(k) + "-subset of " + std::to_string(v) + " points");
  std::uint64_t rank = 0;
  int i = 1;
  while (mask) {
    const int c = std::countr_zero(mask);
    rank += cbin(c, i++);
    mask &= mask - 1;
  }
  return rank;
}

std::uint64_t johnson_unrank(int v, int k, std::uint64_t rank) {
  std::uint64_t mask = 0;
  int c = v - 1;
  for (int i = k; i >= 1; --i) {
    while (cbin(c, i) > rank) --c;
    mask |= std::uint64_t{1} << c;
    rank -= cbin(c, i);
    --c;
  }
  return mask;
}

}  // namespace delsarte

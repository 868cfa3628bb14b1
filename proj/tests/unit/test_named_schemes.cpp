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


#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "delsarte/errors.hpp"
#include "delsarte/named_schemes.hpp"
#include "delsarte/polynomials.hpp"
#include "oracles.hpp"

using namespace delsarte;

namespace {

RelationMatrix from_table(const oracle::Table& t) {
  RelationMatrix r(t.n);
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) r.set(x, y, static_cast<std::uint8_t>(t(x, y)));
  return r;
}

void expect_same_tensors(const AssociationScheme& a, const AssociationScheme& b) {
  const int d = a.num_classes();
  ASSERT_EQ(d, b.num_classes());
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) {
      EXPECT_EQ(a.P()(i, j), b.P()(i, j));
      EXPECT_EQ(a.Q()(i, j), b.Q()(i, j));
      for (int k = 0; k <= d; ++k) {
        EXPECT_EQ(a.p(i, j, k), b.p(i, j, k));
        EXPECT_EQ(a.krein().exact(i, j, k), b.krein().exact(i, j, k));
      }
    }
}

}  // namespace

TEST(Krawtchouk, UnitValues) {
  for (int i = 0; i <= 23; ++i) EXPECT_EQ(krawtchouk(23, 2, 0, i), 1);
  EXPECT_EQ(krawtchouk(7, 2, 1, 3), 1);
  for (int q : {2, 3, 5})
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(krawtchouk(6, q, k, 0), power(q - 1, k) * binomial(6, k));
}

TEST(Krawtchouk, Orthogonality) {
  for (int q : {2, 3})
    for (int n = 1; n <= 12; ++n)
      for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n; ++l) {
          Integer s = 0;
          for (int i = 0; i <= n; ++i) s += binomial(n, i) * power(q - 1, i) * krawtchouk(n, q, k, i) * krawtchouk(n, q, l, i);
          EXPECT_EQ(s, k == l ? power(q, n) * binomial(n, k) * power(q - 1, k) : Integer(0));
        }
}

TEST(Hamming, BasicParameters) {
  const auto s = build_hamming(3, 2);
  EXPECT_EQ(s.num_vertices(), 8u);
  EXPECT_EQ(s.valencies(), (std::vector<std::int64_t>{1, 3, 3, 1}));
  const auto big = build_hamming(23, 2);
  for (int j = 0; j <= 23; ++j) EXPECT_EQ(big.multiplicities()[j], binomial(23, j));
  EXPECT_EQ(big.P(), big.Q());
  EXPECT_THROW(build_hamming(0, 2), Error);
  EXPECT_THROW(build_hamming(3, 1), Error);
}

TEST(Hamming, AgreesWithExplicitConstruction) {
  for (int n = 1; n <= 8; ++n) {
    const auto named = build_hamming(n, 2);
    const auto t = oracle::hamming(n, 2);
    const auto explicit_scheme = verify_scheme(from_table(t), {});
    expect_same_tensors(named, explicit_scheme);
    for (int x = 0; x < t.n; x += 3)
      for (int y = 0; y < t.n; y += 5) EXPECT_EQ(named.relation(x, y), t(x, y));
  }
  const auto named = build_hamming(3, 3);
  expect_same_tensors(named, verify_scheme(from_table(oracle::hamming(3, 3)), {}));
}

TEST(Hamming, VertexEncoding) {
  EXPECT_EQ(hamming_vertex({1, 0, 2}, 3), 9u + 2u);
  EXPECT_EQ(hamming_digits(11, 3, 3), (std::vector<int>{1, 0, 2}));
  const auto s = build_hamming(5, 3);
  EXPECT_EQ(s.relation(hamming_vertex({0, 1, 2, 0, 1}, 3), hamming_vertex({0, 2, 2, 1, 1}, 3)), 2);
  const auto nb = s.neighbors(0, 1);
  EXPECT_EQ(nb.size(), 10u);
  for (auto y : nb) EXPECT_EQ(s.relation(0, y), 1);
}

TEST(Johnson, AgreesWithExplicitConstruction) {
  for (auto [v, k] : std::vector<std::pair<int, int>>{{5, 2}, {6, 3}, {7, 3}, {8, 2}}) {
    const auto named = build_johnson(v, k);
    std::vector<std::uint64_t> masks;
    const auto t = oracle::johnson(v, k, &masks);
    expect_same_tensors(named, verify_scheme(from_table(t), {}));
    for (int x = 0; x < t.n; ++x)
      for (int y = 0; y < t.n; ++y)
        EXPECT_EQ(named.relation(johnson_rank(v, k, masks[x]), johnson_rank(v, k, masks[y])), t(x, y));
  }
}

TEST(Johnson, RankIsABijection) {
  std::set<std::uint64_t> seen;
  const int v = 9, k = 4;
  for (std::uint64_t r = 0; r < 126; ++r) {
    const auto m = johnson_unrank(v, k, r);
    EXPECT_EQ(std::popcount(m), k);
    EXPECT_LT(m, std::uint64_t{1} << v);
    EXPECT_EQ(johnson_rank(v, k, m), r);
    seen.insert(m);
  }
  EXPECT_EQ(seen.size(), 126u);
  EXPECT_THROW(build_johnson(5, 3), Error);
}

TEST(Johnson, PetersenCompatible) {
  const auto j52 = build_johnson(5, 2);
  // relation 1: meet in one point; relation 2: disjoint (the Petersen graph)
  EXPECT_EQ(j52.p(1, 1, 2), 4);
  EXPECT_EQ(j52.p(2, 2, 1), 1);
  EXPECT_EQ(j52.p(2, 2, 2), 0);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) EXPECT_EQ(j52.P()(j, i), eberlein(5, 2, i, j));
}

TEST(Hamming, RecurrenceMatchesOrthogonalPolynomials) {
  for (int n = 1; n <= 12; ++n) {
    const auto s = build_hamming(n, 2);
    const auto sys = drg_ortho_polys(s, false);
    for (int i = 0; i <= n; ++i) {
      // x K_i = (i+1) K_{i+1} + (n-i+1) K_{i-1} for q = 2
      if (i > 0) EXPECT_EQ(sys.lower[i], n - i + 1);
      EXPECT_EQ(sys.diagonal[i], 0);
      if (i < n) EXPECT_EQ(sys.upper[i], i + 1);
      for (int l = 0; l <= n; ++l) EXPECT_EQ(sys.values(l, i), krawtchouk(n, 2, i, l));
    }
  }
}

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

#include <cmath>
#include <functional>
#include <random>

#include "delsarte/codes.hpp"
#include "delsarte/errors.hpp"
#include "delsarte/induced.hpp"
#include "delsarte/named_schemes.hpp"
#include "oracles.hpp"

using namespace delsarte;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::invalid_input;
}

struct JohnsonFixture {
  AssociationScheme s = build_johnson(5, 2);
  std::vector<std::uint64_t> masks;
  oracle::Table t = oracle::johnson(5, 2, &masks);
  std::vector<Eigen::MatrixXd> E = oracle::idempotents(t, oracle::johnson_theta(5, 2));

  std::vector<Vertex> to_vertices(const std::vector<int>& sub) const {
    std::vector<Vertex> v;
    for (int x : sub) v.push_back(johnson_rank(5, 2, masks[x]));
    std::sort(v.begin(), v.end());
    return v;
  }
};

}  // namespace

TEST(RestrictedIdempotents, EntriesGramAndIdentity) {
  const auto s = build_hamming(6, 2);
  const std::vector<Vertex> c{0, 3, 12, 48, 63};
  const auto F = restricted_idempotents(s, c);
  EXPECT_EQ(F.size(), 5u);
  EXPECT_TRUE(F.sum_is_identity());
  EXPECT_TRUE(F.q_ordered());
  for (int i = 0; i <= 6; ++i)
    for (std::size_t x = 0; x < 5; ++x)
      for (std::size_t y = 0; y < 5; ++y) EXPECT_EQ(F.entry(i, x, y), s.Q()(s.relation(c[x], c[y]), i) / 64);
  // Gram by brute force from the dense matrices
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 6; ++j) {
      const auto Fi = F.matrix(i);
      const auto Fj = F.matrix(j);
      Rational tr = 0;
      for (std::size_t x = 0; x < 5; ++x)
        for (std::size_t y = 0; y < 5; ++y) tr += Fi(x, y) * Fj(y, x);
      EXPECT_EQ(F.gram()(i, j), tr);
    }
  EXPECT_EQ(F.gram(), gram_from_krein(s, analyze_subset(s, c)));
}

TEST(RestrictedIdempotents, RejectsLargeSubsets) {
  const auto s = build_hamming(13, 2);
  std::vector<Vertex> c(kRestrictedLimit + 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = i;
  EXPECT_EQ(code_of([&] { restricted_idempotents(s, c); }), ErrorCode::subset_too_large);
}

// trace(F_i F_j) = c |C| sum_k q_ij^k b_k with q in the normalisation
// E_i o E_j = (1/|X|) sum_k q_ij^k E_k. Two candidates for c are on the table:
// 1/|X|^2 (this normalisation) and 1/|X| (the Krein numbers scaled by |X|).
// A numeric orthonormal eigenbasis settles it.
TEST(GramIdentity, NumericOracleFixesTheConstant) {
  JohnsonFixture fx;
  std::mt19937_64 rng(5);
  const double nx = 10.0;
  for (int trial = 0; trial < 25; ++trial) {
    const auto sub = oracle::random_subset(rng, 10, 2 + trial % 7);
    const auto c = fx.to_vertices(sub);
    const auto an = analyze_subset(fx.s, c);
    const auto krein_side = gram_from_krein(fx.s, an);
    const double size = static_cast<double>(c.size());
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j) {
        double num = 0;
        for (int x : sub)
          for (int y : sub) num += fx.E[i](x, y) * fx.E[j](x, y);
        double qb = 0;
        for (int k = 0; k <= 2; ++k) qb += fx.s.krein().value(i, j, k) * an.dual[k].get_d();
        EXPECT_NEAR(num, qb * size / (nx * nx), 1e-10);
        if (qb > 1e-9) EXPECT_GT(std::abs(num - qb * size / nx), 1e-6);
        EXPECT_NEAR(num, krein_side(i, j).get_d(), 1e-10);
      }
  }
}

TEST(Products, FullAndSampledAgree) {
  const auto code = extended_hamming_code(3);
  const auto s = build_hamming(8, 2);
  const auto F = restricted_idempotents(s, code.codewords());
  const std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 4}, {1, 2}, {4, 4}, {0, 8}};
  ProductOptions full;
  full.full = true;
  ProductOptions sampled;
  sampled.full = false;
  sampled.sampled_triples = 2000;
  const auto a = products_vanish(F, pairs, full);
  const auto b = products_vanish(F, pairs, sampled);
  EXPECT_TRUE(a.full);
  EXPECT_FALSE(b.full);
  // b is supported on {0,4,8}, so trace(F_1 F_2) = 0 and F_1 F_2 = 0
  EXPECT_EQ(a.zero, (std::vector<bool>{true, false, true, false, false}));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (!a.zero[i]) EXPECT_FALSE(b.zero[i]);
}

TEST(QMainth, ExtendedHammingDualWitness) {
  const auto code = extended_hamming_code(3).dual();
  const auto s = build_hamming(8, 2);
  const auto words = code.codewords();
  const auto an = analyze_subset(s, words);
  const auto F = restricted_idempotents(s, words);
  const auto wit = find_qmainth_witness(F, an);
  ASSERT_TRUE(wit.has_value());
  EXPECT_EQ(wit->w_star, 0);
  EXPECT_EQ(wit->s, 2);
  EXPECT_TRUE(wit->holds);
  EXPECT_TRUE(step2_bases_independent(F, 0, 2));
  const auto ind = induce_scheme(s, words, true, "witness");
  EXPECT_TRUE(ind.scheme_ok);
  EXPECT_EQ(ind.classes, 2);
  EXPECT_EQ(ind.relation_values, (std::vector<int>{0, 4, 8}));
  EXPECT_TRUE(ind.q_ordering.has_value());
}

TEST(QMainth, SimplexCodeInducesOneClass) {
  const auto code = hamming_code(3).dual();
  const auto s = build_hamming(7, 2);
  const auto ind = induce_scheme(s, code.codewords(), false, "");
  EXPECT_TRUE(ind.scheme_ok);
  EXPECT_EQ(ind.classes, 1);
}

TEST(QMainth, PreconditionsAndNonSchemes) {
  const auto s = build_hamming(6, 2);
  const std::vector<Vertex> c{0, 0b110000, 0b111000};
  const auto an = analyze_subset(s, c);
  const auto F = restricted_idempotents(s, c);
  EXPECT_EQ(code_of([&] { check_qmainth_hypothesis(F, an, 6, {}); }), ErrorCode::precondition_failed);
  EXPECT_EQ(code_of([&] { induce_scheme(s, c, false, ""); }), ErrorCode::not_a_scheme);
  EXPECT_EQ(code_of([&] { induce_scheme(s, c, true, "test"); }), ErrorCode::theorem_violation);
  EXPECT_EQ(code_of([&] { induce_scheme(s, std::vector<Vertex>{5}, false, ""); }), ErrorCode::precondition_failed);
}

TEST(DualIntervalBattery, StatementsAgreeOnJohnsonAndHamming) {
  std::mt19937_64 rng(17);
  const auto j = build_johnson(5, 2);
  const auto h = build_hamming(6, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& s = trial % 2 ? j : h;
    const int n = static_cast<int>(s.num_vertices());
    const auto sub = oracle::random_subset(rng, n, 1 + static_cast<int>(rng() % (trial % 2 ? 9 : 20)));
    const std::vector<Vertex> c(sub.begin(), sub.end());
    const auto an = analyze_subset(s, c);
    const auto F = restricted_idempotents(s, c);
    const auto B = outer_distribution(s, c);
    const DualIntervalBattery battery(s, c, an, F, B);
    const int d = s.num_classes();
    for (int w = 0; w <= d; ++w) {
      EXPECT_TRUE(battery.part2(w).agree()) << trial << " w=" << w;
      for (int t = 1; w + t <= d; ++t) EXPECT_TRUE(battery.part1(w, t).agree()) << trial << " " << w << "," << t;
    }
  }
}

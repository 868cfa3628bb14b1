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

#include <random>

#include "delsarte/codes.hpp"
#include "delsarte/distributions.hpp"
#include "delsarte/errors.hpp"
#include "delsarte/named_schemes.hpp"
#include "oracles.hpp"

using namespace delsarte;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::invalid_input;
}

std::vector<Vertex> as_vertices(const std::vector<int>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(InnerDistribution, Golay23) {
  const auto s = build_hamming(23, 2);
  const auto an = analyze_subset(s, golay23().codewords());
  EXPECT_EQ(an.inner, ints({1, 0, 0, 0, 0, 0, 0, 253, 506, 0, 0, 1288, 1288, 0, 0, 506, 253, 0, 0, 0, 0, 0, 0, 1}));
  auto b = ints({1, 0, 0, 0, 0, 0, 0, 0, 506, 0, 0, 0, 1288, 0, 0, 0, 253, 0, 0, 0, 0, 0, 0, 0});
  for (auto& x : b) x *= 4096;
  EXPECT_EQ(an.dual, b);
  EXPECT_EQ(an.dual_degree_set, (std::vector<int>{8, 12, 16}));
  EXPECT_EQ(an.dual_degree, 3);
  const std::vector<ZeroInterval> z{{0, 6, false}, {8, 2, false}, {12, 2, false}, {16, 6, false}};
  EXPECT_EQ(an.zero_intervals, z);
}

TEST(InnerDistribution, Golay24) {
  const auto s = build_hamming(24, 2);
  const auto an = analyze_subset(s, golay24().codewords());
  const auto a = ints({1, 0, 0, 0, 0, 0, 0, 0, 759, 0, 0, 0, 2576, 0, 0, 0, 759, 0, 0, 0, 0, 0, 0, 0, 1});
  EXPECT_EQ(an.inner, a);
  for (int i = 0; i <= 24; ++i) EXPECT_EQ(an.dual[i], a[i] * 4096);
  EXPECT_EQ(an.dual_degree, 4);
}

TEST(InnerDistribution, TrivialSubsets) {
  const auto s = build_hamming(4, 2);
  const std::vector<Vertex> one{5};
  EXPECT_EQ(inner_distribution(s, one), ints({1, 0, 0, 0, 0}));
  std::vector<Vertex> all(16);
  for (int i = 0; i < 16; ++i) all[i] = i;
  const auto an = analyze_subset(s, all);
  EXPECT_EQ(an.dual, ints({16, 0, 0, 0, 0}));
}

TEST(InnerDistribution, InputErrors) {
  const auto s = build_hamming(3, 2);
  EXPECT_EQ(code_of([&] { inner_distribution(s, std::vector<Vertex>{}); }), ErrorCode::empty_subset);
  EXPECT_EQ(code_of([&] { inner_distribution(s, std::vector<Vertex>{1, 1}); }), ErrorCode::duplicate_vertex);
  EXPECT_EQ(code_of([&] { inner_distribution(s, std::vector<Vertex>{8}); }), ErrorCode::vertex_out_of_range);
  // a = (1,3,0,0) gives b_3 = 1 + 3 K_3(1) = -8
  EXPECT_EQ(code_of([&] { dual_distribution(s, ints({1, 3, 0, 0}), 4); }), ErrorCode::negative_dual);
}

TEST(ZeroIntervals, Examples) {
  EXPECT_TRUE(zero_intervals(ints({1, 2, 3})).empty());
  const std::vector<ZeroInterval> z{{1, 3, false}};
  EXPECT_EQ(zero_intervals(ints({1, 1, 0, 0, 0, 1, 1})), z);
  const std::vector<ZeroInterval> t{{0, 1, false}, {2, 2, true}};
  EXPECT_EQ(zero_intervals(ints({1, 0, 4, 0, 0})), t);
  const auto s = build_hamming(6, 2);
  const auto an = analyze_subset(s, two_by_two_code(3).codewords());
  EXPECT_EQ(an.inner, ints({1, 1, 0, 0, 0, 1, 1}));
  EXPECT_EQ(an.zero_intervals, z);
}

TEST(DualDistribution, LinearCodesBridge) {
  for (const auto& c : {hamming_code(3), extended_hamming_code(3), golay23(), golay24()}) {
    const auto s = build_hamming(c.length(), 2);
    const auto an = analyze_subset(s, c.codewords());
    const auto dual = inner_distribution(s, c.dual().codewords());
    for (int i = 0; i <= c.length(); ++i) EXPECT_EQ(an.dual[i] / static_cast<long>(c.size()), dual[i]);
  }
}

TEST(DualDistribution, RandomSweepAgainstOracles) {
  std::mt19937_64 rng(2024);
  const auto h = build_hamming(8, 2);
  const auto j = build_johnson(7, 3);
  std::vector<std::uint64_t> masks;
  const auto th = oracle::hamming(8, 2);
  const auto tj = oracle::johnson(7, 3, &masks);
  const auto Ej = oracle::idempotents(tj, oracle::johnson_theta(7, 3));
  std::uniform_int_distribution<int> size(2, 32);
  for (int trial = 0; trial < 1000; ++trial) {
    const bool ham = trial % 2 == 0;
    const auto& t = ham ? th : tj;
    const auto sub = oracle::random_subset(rng, t.n, size(rng));
    std::vector<Vertex> vs;
    for (int x : sub) vs.push_back(ham ? Vertex(x) : johnson_rank(7, 3, masks[x]));
    const auto& s = ham ? h : j;
    const auto an = analyze_subset(s, vs);
    const auto counts = oracle::pair_counts(t, sub);
    for (int i = 0; i <= t.d; ++i) EXPECT_EQ(an.inner[i] * static_cast<long>(sub.size()), counts[i]);
    Rational sum = 0;
    for (const auto& b : an.dual) {
      EXPECT_GE(b, 0);
      sum += b;
    }
    EXPECT_EQ(sum, static_cast<long>(t.n));
    EXPECT_EQ(an.dual[0], static_cast<long>(sub.size()));
    for (const auto& v : an.bounds) EXPECT_TRUE(v.satisfied);
    // transform involution: (1/|X|) b P = a
    for (int i = 0; i <= t.d; ++i) {
      Rational back = 0;
      for (int l = 0; l <= t.d; ++l) back += an.dual[l] * s.P()(l, i);
      EXPECT_EQ(back / static_cast<long>(t.n), an.inner[i]);
    }
    if (!ham && trial % 10 == 1) {
      Eigen::VectorXd chi = Eigen::VectorXd::Zero(t.n);
      for (int x : sub) chi(x) = 1;
      for (int l = 0; l <= t.d; ++l)
        EXPECT_NEAR(double(t.n) / double(sub.size()) * chi.dot(Ej[l] * chi), an.dual[l].get_d(), 1e-8);
    }
  }
}

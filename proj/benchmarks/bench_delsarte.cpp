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


#include <benchmark/benchmark.h>

#include "delsarte/codes.hpp"
#include "delsarte/distributions.hpp"
#include "delsarte/induced.hpp"
#include "delsarte/named_schemes.hpp"
#include "delsarte/regularity.hpp"
#include "delsarte/spherical.hpp"

using namespace delsarte;

static void BM_AnalyzeGolay23(benchmark::State& state) {
  const auto s = build_hamming(23, 2);
  const auto words = golay23().codewords();
  for (auto _ : state) benchmark::DoNotOptimize(analyze_subset(s, words));
}
BENCHMARK(BM_AnalyzeGolay23)->Unit(benchmark::kMillisecond);

static void BM_OuterDistributionDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = build_hamming(n, 2);
  // [9,5] code placed in the leading letters
  const auto code = append_free_bit(extended_hamming_code(3));
  std::vector<Vertex> sub;
  for (Vertex x : code.codewords()) sub.push_back(x << (n - 9));
  for (auto _ : state) benchmark::DoNotOptimize(outer_distribution(s, sub));
}
BENCHMARK(BM_OuterDistributionDirect)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_OuterDistributionCoset(benchmark::State& state) {
  const auto s = build_hamming(24, 2);
  const auto code = golay24();
  for (auto _ : state) benchmark::DoNotOptimize(outer_distribution(s, code));
}
BENCHMARK(BM_OuterDistributionCoset)->Unit(benchmark::kMillisecond);

static void BM_InduceGolay24(benchmark::State& state) {
  const auto s = build_hamming(24, 2);
  const auto words = golay24().codewords();
  InducedOptions opt;
  opt.sampled_triples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(induce_scheme(s, words, false, "", opt));
}
BENCHMARK(BM_InduceGolay24)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_MomentsExact(benchmark::State& state) {
  std::vector<std::vector<Rational>> pts;
  for (int a = 0; a < 4; ++a)
    for (int sign : {1, -1}) {
      std::vector<Rational> p(4, Rational(0));
      p[a] = sign;
      pts.push_back(p);
    }
  const auto X = PointSet::from_rational(pts);
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(moments(X, K));
}
BENCHMARK(BM_MomentsExact)->Arg(8)->Arg(20);

BENCHMARK_MAIN();

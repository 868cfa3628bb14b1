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


#ifndef DELSARTE_DISTRIBUTIONS_HPP
#define DELSARTE_DISTRIBUTIONS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "delsarte/number.hpp"
#include "delsarte/scheme.hpp"

namespace delsarte {

/// Maximal run {w+1, ..., w+t} of zeros inside indices 1..d.
struct ZeroInterval {
  int w = 0;
  int t = 0;
  bool terminal = false;  // w + t == d
  friend bool operator==(const ZeroInterval&, const ZeroInterval&) = default;
};

struct BoundVerdict {
  ZeroInterval interval;
  bool dual = false;       // interval of b, bounded by the degree s
  bool terminal = false;   // bound t <= s* (or s) instead of 2 s*
  int bound = 0;
  bool satisfied = true;
  int gap = 0;             // bound - t
};

struct SubsetAnalysis {
  std::uint64_t subset_size = 0;
  std::uint64_t num_vertices = 0;
  std::vector<Rational> inner;  // a
  std::vector<Rational> dual;   // b
  std::vector<int> degree_set;
  std::vector<int> dual_degree_set;
  int degree = 0;
  int dual_degree = 0;
  std::vector<ZeroInterval> zero_intervals;
  std::vector<ZeroInterval> dual_zero_intervals;
  std::vector<BoundVerdict> bounds;
};

/// Rejects empty subsets, duplicates and out-of-range vertices.
void validate_subset(const AssociationScheme& scheme, std::span<const Vertex> subset);

/// Ordered-pair counts n_i = |{(x,y) in C^2 : relation(x,y) = i}|.
std::vector<std::int64_t> relation_pair_counts(const AssociationScheme& scheme, std::span<const Vertex> subset);

/// a_i = n_i / |C|.
std::vector<Rational> inner_distribution(const AssociationScheme& scheme, std::span<const Vertex> subset);

/// b_j = sum_i a_i Q_ij. Needs an exact scheme; throws negative_dual on b_j < 0.
std::vector<Rational> dual_distribution(const AssociationScheme& scheme, const std::vector<Rational>& inner,
                                        std::uint64_t subset_size);

/// Maximal zero runs of v[1..d].
std::vector<ZeroInterval> zero_intervals(const std::vector<Rational>& v);

/// { i >= 1 : v_i != 0 }.
std::vector<int> support_set(const std::vector<Rational>& v);

std::vector<BoundVerdict> check_bounds(const SubsetAnalysis& analysis);

/// Throws bound_violation naming the first failed verdict.
void enforce_bounds(const std::vector<BoundVerdict>& verdicts);

SubsetAnalysis analyze_subset(const AssociationScheme& scheme, std::span<const Vertex> subset);

}  // namespace delsarte

#endif  // DELSARTE_DISTRIBUTIONS_HPP

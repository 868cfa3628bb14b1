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


#include "delsarte/distributions.hpp"

#include <algorithm>
#include <unordered_set>

#include "delsarte/concurrency.hpp"
#include "delsarte/errors.hpp"

namespace delsarte {

void validate_subset(const AssociationScheme& scheme, std::span<const Vertex> subset) {
  if (subset.empty()) fail(ErrorCode::empty_subset, "subset is empty");
  std::unordered_set<Vertex> seen;
  seen.reserve(subset.size() * 2);
  for (Vertex x : subset) {
    scheme.check_vertex(x);
    if (!seen.insert(x).second) fail(ErrorCode::duplicate_vertex, "vertex " + std::to_string(x) + " repeated");
  }
}

std::vector<std::int64_t> relation_pair_counts(const AssociationScheme& scheme, std::span<const Vertex> subset) {
  validate_subset(scheme, subset);
  const int m = scheme.num_classes() + 1;
  const std::size_t n = subset.size();
  std::vector<std::uint64_t> keys(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = scheme.key(subset[i]);
  const std::size_t chunks = std::min<std::size_t>(n, 64);
  std::vector<std::vector<std::int64_t>> partial(chunks, std::vector<std::int64_t>(m, 0));
  parallel_chunks(n, chunks, [&](std::size_t c, std::size_t begin, std::size_t end) {
    auto& counts = partial[c];
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = i + 1; j < n; ++j) counts[scheme.relation_of_keys(keys[i], keys[j])] += 2;
  });
  std::vector<std::int64_t> counts(m, 0);
  counts[0] = static_cast<std::int64_t>(n);
  for (const auto& p : partial)
    for (int i = 0; i < m; ++i) counts[i] += p[i];
  return counts;
}

std::vector<Rational> inner_distribution(const AssociationScheme& scheme, std::span<const Vertex> subset) {
  const auto counts = relation_pair_counts(scheme, subset);
  std::vector<Rational> a(counts.size());
  const Rational size(static_cast<long>(subset.size()));
  for (std::size_t i = 0; i < counts.size(); ++i) {
    a[i] = Rational(static_cast<long>(counts[i])) / size;
    a[i].canonicalize();
  }
  return a;
}

std::vector<Rational> dual_distribution(const AssociationScheme& scheme, const std::vector<Rational>& inner,
                                        std::uint64_t subset_size) {
  const auto& Q = scheme.Q();
  const int m = scheme.num_classes() + 1;
  if (static_cast<int>(inner.size()) != m) fail(ErrorCode::invalid_input, "inner distribution has wrong length");
  if (inner[0] != 1) fail(ErrorCode::invalid_input, "inner distribution must have a_0 = 1");
  std::vector<Rational> b(m);
  for (int j = 0; j < m; ++j) {
    Rational s = 0;
    for (int i = 0; i < m; ++i)
      if (inner[i] != 0) s += inner[i] * Q(i, j);
    b[j] = s;
    if (s < 0) fail(ErrorCode::negative_dual, "b_" + std::to_string(j) + " = " + to_string(s));
  }
  if (b[0] != Rational(Integer(std::to_string(subset_size))))
    fail(ErrorCode::invalid_input, "inner distribution does not sum to the subset size");
  return b;
}

std::vector<int> support_set(const std::vector<Rational>& v) {
  std::vector<int> out;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] != 0) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<ZeroInterval> zero_intervals(const std::vector<Rational>& v) {
  const int d = static_cast<int>(v.size()) - 1;
  std::vector<ZeroInterval> out;
  int i = 1;
  while (i <= d) {
    if (v[i] != 0) {
      ++i;
      continue;
    }
    const int start = i;
    while (i <= d && v[i] == 0) ++i;
    out.push_back({start - 1, i - start, i - 1 == d});
  }
  return out;
}

std::vector<BoundVerdict> check_bounds(const SubsetAnalysis& an) {
  std::vector<BoundVerdict> out;
  auto add = [&](const ZeroInterval& z, bool dual, int degree) {
    BoundVerdict v;
    v.interval = z;
    v.dual = dual;
    v.terminal = z.terminal;
    v.bound = z.terminal ? degree : 2 * degree;
    v.satisfied = z.t <= v.bound;
    v.gap = v.bound - z.t;
    out.push_back(v);
  };
  for (const auto& z : an.zero_intervals) add(z, false, an.dual_degree);
  for (const auto& z : an.dual_zero_intervals) add(z, true, an.degree);
  return out;
}

void enforce_bounds(const std::vector<BoundVerdict>& verdicts) {
  for (const auto& v : verdicts)
    if (!v.satisfied)
      fail(ErrorCode::bound_violation,
           std::string(v.dual ? "dual zero interval" : "zero interval") + " (w=" + std::to_string(v.interval.w) +
               ", t=" + std::to_string(v.interval.t) + ") exceeds bound " + std::to_string(v.bound));
}

SubsetAnalysis analyze_subset(const AssociationScheme& scheme, std::span<const Vertex> subset) {
  SubsetAnalysis an;
  an.subset_size = subset.size();
  an.num_vertices = scheme.num_vertices();
  an.inner = inner_distribution(scheme, subset);
  an.dual = dual_distribution(scheme, an.inner, an.subset_size);
  an.degree_set = support_set(an.inner);
  an.dual_degree_set = support_set(an.dual);
  an.degree = static_cast<int>(an.degree_set.size());
  an.dual_degree = static_cast<int>(an.dual_degree_set.size());
  an.zero_intervals = zero_intervals(an.inner);
  an.dual_zero_intervals = zero_intervals(an.dual);
  an.bounds = check_bounds(an);
  return an;
}

}  // namespace delsarte

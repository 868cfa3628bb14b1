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


#include "delsarte/regularity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "delsarte/concurrency.hpp"
#include "delsarte/errors.hpp"
#include "delsarte/matrix.hpp"

namespace delsarte {

namespace {

void fill_distances(OuterDistribution& B) {
  const int m = B.num_classes + 1;
  B.distance.assign(B.num_rows(), 0);
  B.covering_radius = 0;
  for (std::size_t r = 0; r < B.num_rows(); ++r) {
    const auto row = B.row(r);
    int i = 0;
    while (i < m && row[i] == 0) ++i;
    B.distance[r] = i;
    B.covering_radius = std::max(B.covering_radius, i);
  }
}

__extension__ using u128 = unsigned __int128;

Integer to_integer(u128 v) {
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
  mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), 64);
  return hi + Integer(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
}

}  // namespace

std::size_t OuterDistribution::row_of(Vertex x) const {
  if (mode == OuterMode::direct) return static_cast<std::size_t>(x);
  const Vertex rep = code->reduce(x);
  return static_cast<std::size_t>(std::lower_bound(row_vertex.begin(), row_vertex.end(), rep) - row_vertex.begin());
}

std::size_t OuterDistribution::rank() const {
  std::set<std::vector<std::uint32_t>> distinct;
  for (std::size_t r = 0; r < num_rows(); ++r) distinct.emplace(row(r).begin(), row(r).end());
  std::vector<std::vector<Integer>> rows;
  for (const auto& v : distinct) {
    std::vector<Integer> z;
    for (auto e : v) z.emplace_back(static_cast<unsigned long>(e));
    rows.push_back(std::move(z));
  }
  return rank_of_rows(std::move(rows));
}

OuterDistribution outer_distribution(const AssociationScheme& scheme, std::span<const Vertex> subset) {
  validate_subset(scheme, subset);
  if (scheme.num_vertices() > kOuterDirectLimit)
    fail(ErrorCode::scheme_too_large, "outer distribution needs |X| <= 2^20 (use the linear-code form)");
  OuterDistribution B;
  B.mode = OuterMode::direct;
  B.num_classes = scheme.num_classes();
  B.subset_size = subset.size();
  const int m = B.num_classes + 1;
  const std::size_t nv = scheme.num_vertices();
  B.row_vertex.resize(nv);
  B.row_weight.assign(nv, 1);
  B.counts.assign(nv * m, 0);
  std::vector<std::uint64_t> keys(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) keys[i] = scheme.key(subset[i]);
  parallel_chunks(nv, std::min<std::size_t>(nv, 256), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t x = begin; x < end; ++x) {
      B.row_vertex[x] = x;
      const std::uint64_t kx = scheme.key(x);
      std::uint32_t* row = B.counts.data() + x * m;
      for (auto ky : keys) ++row[scheme.relation_of_keys(kx, ky)];
    }
  });
  fill_distances(B);
  return B;
}

OuterDistribution outer_distribution(const AssociationScheme& scheme, const BinaryLinearCode& code) {
  const auto [n, q] = scheme.family_parameters();
  if (scheme.family() != Family::hamming || q != 2 || n != code.length())
    fail(ErrorCode::invalid_input, "coset mode needs H(n,2) with n equal to the code length");
  if (scheme.relation(0, 1) != 1 || !scheme.is_p_polynomial_as_ordered())
    fail(ErrorCode::invalid_input, "coset mode needs the natural Hamming relation order");
  OuterDistribution B;
  B.mode = OuterMode::coset;
  B.code = &code;
  B.num_classes = n;
  B.subset_size = code.size();
  const int m = n + 1;
  B.row_vertex = code.coset_representatives();
  const std::size_t rows = B.row_vertex.size();
  B.row_weight.assign(rows, code.size());
  B.counts.assign(rows * m, 0);
  const auto words = code.codewords();
  parallel_chunks(rows, std::min<std::size_t>(rows, 256), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      std::uint32_t* row = B.counts.data() + r * m;
      const Vertex x = B.row_vertex[r];
      for (auto c : words) ++row[std::popcount(x ^ c)];
    }
  });
  fill_distances(B);
  return B;
}

RegularityVerdict is_completely_regular(const OuterDistribution& B) {
  RegularityVerdict v;
  v.covering_radius = B.covering_radius;
  std::vector<std::optional<std::size_t>> first(B.num_classes + 1);
  // Rows are visited in vertex order; the first mismatch is the witness.
  for (std::size_t r = 0; r < B.num_rows(); ++r) {
    auto& f = first[B.distance[r]];
    if (!f) {
      f = r;
      continue;
    }
    const auto a = B.row(*f), b = B.row(r);
    if (!std::equal(a.begin(), a.end(), b.begin())) {
      v.completely_regular = false;
      v.witness = std::make_pair(B.row_vertex[*f], B.row_vertex[r]);
      return v;
    }
  }
  v.completely_regular = true;
  for (int i = 0; i <= B.covering_radius; ++i) {
    if (!first[i]) continue;
    const auto row = B.row(*first[i]);
    v.quotient_table.emplace_back(row.begin(), row.end());
  }
  return v;
}

MainthCheck check_mainth_hypothesis(const SubsetAnalysis& an, const OuterDistribution& B, int w) {
  const int d = B.num_classes;
  const int s = an.dual_degree;
  if (w < 0 || w > d - s)
    fail(ErrorCode::precondition_failed, "w = " + std::to_string(w) + " outside 0.." + std::to_string(d - s));
  if (an.inner[w] <= 0) fail(ErrorCode::precondition_failed, "a_" + std::to_string(w) + " = 0");
  MainthCheck out;
  out.w = w;
  out.holds = true;
  for (std::size_t r = 0; r < B.num_rows() && out.holds; ++r) {
    const int i = B.distance[r];
    if (i > s) continue;
    const auto row = B.row(r);
    for (int j = w + i + 1; j <= std::min(w + s, d); ++j)
      if (row[j] != 0) {
        out.holds = false;
        out.failing_vertex = B.row_vertex[r];
        break;
      }
  }
  out.completely_regular = is_completely_regular(B).completely_regular;
  if (out.holds && !out.completely_regular)
    fail(ErrorCode::theorem_violation,
         "hypothesis holds for w = " + std::to_string(w) + " but the subset is not completely regular");
  return out;
}

std::vector<IntervalPrediction> check_int_condition(const SubsetAnalysis& an, const OuterDistribution& B) {
  std::vector<IntervalPrediction> out;
  std::optional<bool> cr;
  for (const auto& z : an.zero_intervals) {
    IntervalPrediction p;
    p.interval = z;
    p.predicted = 2 * an.dual_degree - 1 <= z.t;
    if (!cr) cr = is_completely_regular(B).completely_regular;
    p.confirmed = *cr;
    if (p.predicted && !p.confirmed)
      fail(ErrorCode::theorem_violation, "zero interval (w=" + std::to_string(z.w) + ", t=" + std::to_string(z.t) +
                                             ") predicts complete regularity, enumeration disagrees");
    out.push_back(p);
  }
  return out;
}

RankCertificate rank_certificate(const AssociationScheme& scheme, std::span<const Vertex> subset,
                                 const OuterDistribution& B, Vertex x, const ZeroInterval& interval) {
  const int d = B.num_classes;
  const bool coset = B.mode == OuterMode::coset;
  bool member = coset ? B.code->contains(x) : std::find(subset.begin(), subset.end(), x) != subset.end();
  if (!member) fail(ErrorCode::base_point_not_in_subset, "vertex " + std::to_string(x) + " is not in C");
  const auto row = B.row(B.row_of(x));
  for (int k = interval.w + 1; k <= interval.w + interval.t; ++k)
    if (row[k] != 0) fail(ErrorCode::precondition_failed, "row of the base point is nonzero inside the interval");

  RankCertificate cert;
  cert.base_point = x;
  cert.interval = interval;
  int lo = interval.w;
  while (row[lo] == 0) --lo;  // row[0] = 1 for x in C
  int hi = interval.w + interval.t + 1;
  while (hi <= d && row[hi] == 0) ++hi;
  cert.w_x = lo;
  cert.t_x = hi - 1 - lo;
  cert.terminal = hi == d + 1;
  cert.num_vectors = cert.terminal ? cert.t_x + 1 : cert.t_x / 2 + 1;

  // Vectors chi, A_1 chi, ... over X, or over the cosets in coset mode.
  const std::size_t len = B.num_rows();
  std::vector<std::vector<std::size_t>> adj(len);
  if (coset) {
    const int n = d;
    for (std::size_t r = 0; r < len; ++r)
      for (int b = 0; b < n; ++b) adj[r].push_back(B.row_of(B.row_vertex[r] ^ (Vertex{1} << b)));
  } else {
    for (std::size_t r = 0; r < len; ++r)
      for (Vertex y : scheme.neighbors(r, 1)) adj[r].push_back(static_cast<std::size_t>(y));
  }
  const double growth = std::log2(static_cast<double>(std::max<std::size_t>(2, adj.empty() ? 2 : adj[0].size())));
  if (growth * cert.num_vectors + std::log2(static_cast<double>(len) + 1) > 120)
    fail(ErrorCode::precondition_failed, "walk counts would overflow 128 bits");

  std::vector<std::vector<u128>> vecs;
  std::vector<u128> cur(len, 0);
  if (coset) cur[B.row_of(0)] = 1;
  else
    for (Vertex c : subset) cur[static_cast<std::size_t>(c)] = 1;
  vecs.push_back(cur);
  for (int i = 1; i < cert.num_vectors; ++i) {
    std::vector<u128> next(len, 0);
    for (std::size_t r = 0; r < len; ++r) {
      u128 s = 0;
      for (auto nb : adj[r]) s += cur[nb];
      next[r] = s;
    }
    cur = std::move(next);
    vecs.push_back(cur);
  }
  // Repeated columns do not change the row rank.
  std::set<std::vector<u128>> columns;
  for (std::size_t r = 0; r < len; ++r) {
    std::vector<u128> col(vecs.size());
    for (std::size_t v = 0; v < vecs.size(); ++v) col[v] = vecs[v][r];
    columns.insert(std::move(col));
  }
  std::vector<std::vector<Integer>> rows(vecs.size());
  for (const auto& col : columns)
    for (std::size_t v = 0; v < vecs.size(); ++v) rows[v].push_back(to_integer(col[v]));
  cert.vectors_rank = rank_of_rows(std::move(rows));
  cert.rank_B = B.rank();
  cert.independent = cert.vectors_rank == static_cast<std::size_t>(cert.num_vectors);
  cert.bound_holds = static_cast<std::size_t>(cert.num_vectors) <= cert.rank_B;
  return cert;
}

}  // namespace delsarte

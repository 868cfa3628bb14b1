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


#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "delsarte/concurrency.hpp"
#include "delsarte/errors.hpp"
#include "delsarte/scheme.hpp"

namespace delsarte {

namespace {

/// Per-vertex, per-relation neighbourhood bitsets.
class RelationBitsets {
 public:
  RelationBitsets(const RelationMatrix& r, int d) : n_(r.size()), d_(d), words_((n_ + 63) / 64) {
    const std::size_t total = n_ * (d_ + 1) * words_;
    if (total > (std::size_t{1} << 28))
      fail(ErrorCode::scheme_too_large, "relation bitsets would exceed memory budget");
    bits_.assign(total, 0);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) {
        std::uint64_t* row = bits_.data() + (x * (d_ + 1) + r(x, y)) * words_;
        row[y >> 6] |= std::uint64_t{1} << (y & 63);
      }
  }

  /// counts[i*(d+1)+j] = |{z : rel(x,z)=i, rel(z,y)=j}|
  void count(std::size_t x, std::size_t y, std::vector<std::int64_t>& counts) const {
    const int m = d_ + 1;
    counts.assign(static_cast<std::size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i) {
      const std::uint64_t* a = bits_.data() + (x * m + i) * words_;
      for (int j = 0; j < m; ++j) {
        const std::uint64_t* b = bits_.data() + (y * m + j) * words_;
        std::int64_t c = 0;
        for (std::size_t w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
        counts[i * m + j] = c;
      }
    }
  }

 private:
  std::size_t n_;
  int d_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

struct Mismatch {
  std::size_t x = SIZE_MAX, y = SIZE_MAX;
  int i = 0, j = 0;
  std::int64_t got = 0;
};

[[noreturn]] void report(const Mismatch& m, int k, std::size_t rx, std::size_t ry, std::int64_t want) {
  fail(ErrorCode::inconsistent_intersection_number,
       "p[" + std::to_string(m.i) + "][" + std::to_string(m.j) + "][" + std::to_string(k) + "]: pair (" +
           std::to_string(m.x) + "," + std::to_string(m.y) + ") counts " + std::to_string(m.got) +
           " but pair (" + std::to_string(rx) + "," + std::to_string(ry) + ") counts " + std::to_string(want));
}

}  // namespace

IntersectionNumbers count_intersection_numbers(const RelationMatrix& relations, const VerifyOptions& options,
                                               VerificationReport* report_out) {
  const std::size_t n = relations.size();
  const int d = relations.max_relation();
  const int m = d + 1;
  const RelationBitsets bits(relations, d);

  // Reference pair for each relation: first in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> ref(m, {SIZE_MAX, SIZE_MAX});
  int found = 0;
  for (std::size_t x = 0; x < n && found < m; ++x)
    for (std::size_t y = 0; y < n && found < m; ++y) {
      auto& r = ref[relations(x, y)];
      if (r.first == SIZE_MAX) {
        r = {x, y};
        ++found;
      }
    }
  for (int k = 0; k < m; ++k)
    if (ref[k].first == SIZE_MAX) fail(ErrorCode::invalid_input, "relation " + std::to_string(k) + " is empty");

  std::vector<std::vector<std::int64_t>> ref_counts(m);
  for (int k = 0; k < m; ++k) bits.count(ref[k].first, ref[k].second, ref_counts[k]);

  auto check_pair = [&](std::size_t x, std::size_t y, std::vector<std::int64_t>& buf, Mismatch& out) {
    const int k = relations(x, y);
    bits.count(x, y, buf);
    for (int idx = 0; idx < m * m; ++idx)
      if (buf[idx] != ref_counts[k][idx]) {
        out = {x, y, idx / m, idx % m, buf[idx]};
        return false;
      }
    return true;
  };

  VerificationReport rep;
  rep.full = options.full;
  if (options.full) {
    // Rows split across workers; the first mismatch in row-major order wins.
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(max_threads(), n));
    std::vector<Mismatch> first(chunks);
    parallel_chunks(n, chunks, [&](std::size_t c, std::size_t begin, std::size_t end) {
      std::vector<std::int64_t> buf;
      Mismatch mm;
      for (std::size_t x = begin; x < end; ++x)
        for (std::size_t y = x; y < n; ++y)
          if (!check_pair(x, y, buf, mm)) {
            first[c] = mm;
            return;
          }
    });
    for (const auto& mm : first)
      if (mm.x != SIZE_MAX) {
        const int k = relations(mm.x, mm.y);
        report(mm, k, ref[k].first, ref[k].second, ref_counts[k][mm.i * m + mm.j]);
      }
    rep.pairs_checked = n * (n + 1) / 2;
    rep.triples_checked = rep.pairs_checked * n;
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::uint64_t pairs = std::max<std::uint64_t>(1, (options.sampled_triples + n - 1) / n);
    std::vector<std::int64_t> buf;
    Mismatch mm;
    for (std::uint64_t s = 0; s < pairs; ++s) {
      const std::size_t x = pick(rng), y = pick(rng);
      if (!check_pair(x, y, buf, mm)) {
        const int k = relations(x, y);
        report(mm, k, ref[k].first, ref[k].second, ref_counts[k][mm.i * m + mm.j]);
      }
    }
    rep.pairs_checked = pairs + static_cast<std::uint64_t>(m);
    rep.triples_checked = rep.pairs_checked * n;
  }
  if (report_out) *report_out = rep;

  IntersectionNumbers p(d);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) p.at(i, j, k) = ref_counts[k][i * m + j];
  return p;
}

AssociationScheme verify_scheme(RelationMatrix relations, const VerifyOptions& options) {
  const std::size_t n = relations.size();
  if (n < 2) fail(ErrorCode::invalid_input, "a scheme needs at least two vertices");
  if (n > kExplicitVertexLimit)
    fail(ErrorCode::scheme_too_large, "explicit schemes are limited to " + std::to_string(kExplicitVertexLimit) + " vertices");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (relations(x, y) != relations(y, x))
        fail(ErrorCode::not_symmetric, "relation(" + std::to_string(x) + "," + std::to_string(y) + ") = " +
                                           std::to_string(relations(x, y)) + " but relation(" + std::to_string(y) +
                                           "," + std::to_string(x) + ") = " + std::to_string(relations(y, x)));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if ((relations(x, y) == 0) != (x == y))
        fail(ErrorCode::diagonal_not_identity_relation,
             "relation 0 must be equality; offending pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
  if (relations.max_relation() < 1) fail(ErrorCode::invalid_input, "scheme needs at least one class");
  VerificationReport rep;
  auto p = count_intersection_numbers(relations, options, &rep);
  return scheme_from_verified(std::move(relations), std::move(p), rep);
}

AssociationScheme scheme_from_verified(RelationMatrix relations, IntersectionNumbers p, VerificationReport report) {
  AssociationScheme s;
  s.d_ = p.num_classes();
  s.num_vertices_ = relations.size();
  s.family_ = Family::explicit_matrix;
  s.relations_ = std::make_shared<const RelationMatrix>(std::move(relations));
  s.valencies_ = p.valencies();
  s.eigen_ = eigensystem(p, s.num_vertices_);
  s.p_ = std::move(p);
  s.verification_ = report;
  s.finish_spectral();
  return s;
}

}  // namespace delsarte

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


#ifndef DELSARTE_INDUCED_HPP
#define DELSARTE_INDUCED_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "delsarte/distributions.hpp"
#include "delsarte/regularity.hpp"
#include "delsarte/scheme.hpp"

namespace delsarte {

inline constexpr std::size_t kRestrictedLimit = 4096;
/// Above this size products F_k F_l are checked on sampled pairs.
inline constexpr std::size_t kFullProductLimit = 1024;

/// F_i = E_i restricted to C x C, i.e. F_i(x,y) = Q[rel(x,y)][i] / |X|.
/// Stored as the relation table on C together with Q.
class RestrictedIdempotents {
 public:
  std::size_t size() const noexcept { return subset_.size(); }
  int num_classes() const noexcept { return d_; }
  std::uint64_t num_vertices() const noexcept { return nv_; }
  const std::vector<Vertex>& subset() const noexcept { return subset_; }

  /// Ambient relation of (subset[x], subset[y]).
  int relation(std::size_t x, std::size_t y) const { return table_[x * subset_.size() + y]; }
  /// Relation values realised in C, ascending; element 0 is the identity.
  const std::vector<int>& realized_relations() const noexcept { return realized_; }
  /// Ordered pair counts per ambient relation.
  const std::vector<std::int64_t>& pair_counts() const noexcept { return pair_counts_; }

  Rational entry(int i, std::size_t x, std::size_t y) const;
  /// Dense F_i; only for small C.
  RatMatrix matrix(int i) const;
  /// G[i][j] = trace(F_i F_j) = (1/|X|^2) sum_r n_r Q_ri Q_rj.
  const RatMatrix& gram() const noexcept { return gram_; }
  const RatMatrix& Q() const noexcept { return Q_; }
  bool q_ordered() const noexcept { return q_ordered_; }

  /// sum_i F_i is the identity on C.
  bool sum_is_identity() const;

 private:
  friend RestrictedIdempotents restricted_idempotents(const AssociationScheme&, std::span<const Vertex>);
  int d_ = 0;
  std::uint64_t nv_ = 0;
  std::vector<Vertex> subset_;
  std::vector<std::uint8_t> table_;
  std::vector<int> realized_;
  std::vector<std::int64_t> pair_counts_;
  RatMatrix Q_;
  RatMatrix gram_;
  bool q_ordered_ = false;
};

/// Needs an exact scheme; throws subset_too_large above kRestrictedLimit.
RestrictedIdempotents restricted_idempotents(const AssociationScheme& scheme, std::span<const Vertex> subset);

/// |C| sum_k q[i][j][k] b_k / |X|^2, the right-hand side of the Gram identity.
RatMatrix gram_from_krein(const AssociationScheme& scheme, const SubsetAnalysis& analysis);

struct ProductOptions {
  /// Unset: exhaustive when |C| <= kFullProductLimit, sampled otherwise.
  std::optional<bool> full;
  std::uint64_t sampled_triples = 1'000'000;
  std::uint64_t seed = 0x5eed;
};

struct ProductReport {
  std::vector<bool> zero;  // one per requested (k, l)
  bool full = true;
  std::uint64_t pairs_checked = 0;
  std::uint64_t triples_checked = 0;
};

/// Tests F_k F_l == 0 entrywise for each requested pair.
ProductReport products_vanish(const RestrictedIdempotents& F, const std::vector<std::pair<int, int>>& pairs,
                              const ProductOptions& options = {});

struct QMainthCheck {
  int w_star = 0;
  int s = 0;
  bool holds = false;
  std::vector<std::pair<int, int>> failing;  // (k, l) with F_k F_l != 0
  ProductReport products;
};

/// F_k F_l = 0 for k, l in 0..w*+s with |k-l| >= w*+1. Throws
/// precondition_failed unless 0 <= w* <= d-s and b_{w*} > 0.
QMainthCheck check_qmainth_hypothesis(const RestrictedIdempotents& F, const SubsetAnalysis& analysis, int w_star,
                                      const ProductOptions& options = {});

/// First admissible w* whose hypothesis holds, if any.
std::optional<QMainthCheck> find_qmainth_witness(const RestrictedIdempotents& F, const SubsetAnalysis& analysis,
                                                 const ProductOptions& options = {});

/// {F_0..F_{j-1}, F_{w*+j}..F_{w*+s}} linearly independent for every 0 <= j <= s+1.
bool step2_bases_independent(const RestrictedIdempotents& F, int w_star, int s);

struct InducedOptions {
  /// Unset: exhaustive triple counting when |C| <= kFullProductLimit.
  std::optional<bool> full_verify;
  std::uint64_t sampled_triples = 1'000'000;
  std::uint64_t seed = 0x5eed;
};

struct InducedScheme {
  /// Ambient relation value of each induced relation; element 0 is the identity.
  std::vector<int> relation_values;
  int classes = 0;
  bool licensed = false;  // a sufficient condition held before construction
  std::string licence;
  bool scheme_ok = false;
  VerificationReport verification;
  NumberMode number_mode = NumberMode::exact;
  std::optional<std::vector<int>> q_ordering;
  std::optional<AssociationScheme> scheme;
};

/// Builds (C, R^C) from the relation values realised in C and certifies it.
/// Licensed constructions raise theorem_violation on failure; unlicensed ones
/// raise not_a_scheme with the offending triple.
InducedScheme induce_scheme(const AssociationScheme& scheme, std::span<const Vertex> subset, bool licensed,
                            const std::string& licence, const InducedOptions& options = {});

/// Same certification for an explicit relation matrix (used for point sets).
InducedScheme certify_relation_scheme(RelationMatrix relations, std::vector<int> relation_values, bool licensed,
                                      const std::string& licence, const InducedOptions& options = {});

/// Statements (a)-(e) of the dual-zero-interval equivalence, each evaluated
/// by its own route: (a) from b, (b) E_i Delta_C E_j over X, (c) E_k chi from
/// the outer distribution, (d) Gram entries, (e) products F_i F_j.
struct DualIntervalStatements {
  bool a = false, b = false, c = false, d = false, e = false;
  bool agree() const { return a == b && a == c && a == d && a == e; }
};

/// Precomputed zero patterns for every (i, j) and k; the statements for any
/// (w*, t*) are then read off.
class DualIntervalBattery {
 public:
  DualIntervalBattery(const AssociationScheme& scheme, std::span<const Vertex> subset, const SubsetAnalysis& analysis,
            const RestrictedIdempotents& F, const OuterDistribution& B);

  /// b_k = 0 for w*+1 <= k <= w*+t* and the four restatements.
  DualIntervalStatements part1(int w_star, int t_star) const;
  /// b_{w*} > 0 and the four restatements.
  DualIntervalStatements part2(int w_star) const;

 private:
  int d_;
  std::vector<bool> b_zero_;                        // b_k == 0
  std::vector<bool> echi_zero_;                     // E_k chi == 0
  std::vector<std::vector<bool>> edelta_zero_;      // E_i Delta_C E_j == 0
  std::vector<std::vector<bool>> gram_zero_;        // trace(F_i F_j) == 0
  std::vector<std::vector<bool>> product_zero_;     // F_i F_j == 0
};

}  // namespace delsarte

#endif  // DELSARTE_INDUCED_HPP

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


#ifndef DELSARTE_REGULARITY_HPP
#define DELSARTE_REGULARITY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "delsarte/codes.hpp"
#include "delsarte/distributions.hpp"
#include "delsarte/scheme.hpp"

namespace delsarte {

/// Largest |X| for which B is computed row by row.
inline constexpr std::uint64_t kOuterDirectLimit = std::uint64_t{1} << 20;

enum class OuterMode { direct, coset };

/// Outer distribution B[x][i] = |{y in C : relation(x,y) = i}|. In direct mode
/// there is one row per vertex. In coset mode (binary linear codes) rows are
/// constant on the cosets x + C, so one row per canonical coset
/// representative is kept, each standing for |C| vertices.
struct OuterDistribution {
  OuterMode mode = OuterMode::direct;
  int num_classes = 0;
  std::uint64_t subset_size = 0;
  std::vector<Vertex> row_vertex;
  std::vector<std::uint64_t> row_weight;
  std::vector<std::uint32_t> counts;  // num_rows x (d+1), row-major
  std::vector<int> distance;          // partial(x, C) per row
  int covering_radius = 0;

  std::size_t num_rows() const noexcept { return row_vertex.size(); }
  std::span<const std::uint32_t> row(std::size_t r) const {
    return {counts.data() + r * (num_classes + 1), static_cast<std::size_t>(num_classes + 1)};
  }
  /// Index of the row holding vertex x (identity in direct mode).
  std::size_t row_of(Vertex x) const;
  /// Exact rank of B.
  std::size_t rank() const;

  const BinaryLinearCode* code = nullptr;  // coset mode only; not owned
};

OuterDistribution outer_distribution(const AssociationScheme& scheme, std::span<const Vertex> subset);
/// Coset mode; the scheme must be H(n,2) in its natural order. `code` must outlive the result.
OuterDistribution outer_distribution(const AssociationScheme& scheme, const BinaryLinearCode& code);

struct RegularityVerdict {
  bool completely_regular = false;
  int covering_radius = 0;
  /// Row of B for each distance 0..rho (when completely regular).
  std::vector<std::vector<std::uint32_t>> quotient_table;
  /// First vertex whose row differs from the first row at its distance, paired with that first vertex.
  std::optional<std::pair<Vertex, Vertex>> witness;
};

RegularityVerdict is_completely_regular(const OuterDistribution& B);

struct MainthCheck {
  int w = 0;
  bool holds = false;
  std::optional<Vertex> failing_vertex;
  bool completely_regular = false;
};

/// Hypothesis of the completely-regular criterion: B[x][j] = 0 for
/// w+i+1 <= j <= w+s* whenever partial(x,C) = i <= s*. Throws
/// precondition_failed unless 0 <= w <= d-s* and a_w > 0, and
/// theorem_violation if the hypothesis holds but C is not completely regular.
MainthCheck check_mainth_hypothesis(const SubsetAnalysis& analysis, const OuterDistribution& B, int w);

struct IntervalPrediction {
  ZeroInterval interval;
  bool predicted = false;  // 2 s* - 1 <= t
  bool confirmed = false;  // completely regular by enumeration
};

/// One entry per maximal zero interval; throws theorem_violation when a
/// prediction is not confirmed.
std::vector<IntervalPrediction> check_int_condition(const SubsetAnalysis& analysis, const OuterDistribution& B);

struct RankCertificate {
  Vertex base_point = 0;
  ZeroInterval interval;
  int w_x = 0;
  int t_x = 0;
  bool terminal = false;
  int num_vectors = 0;          // floor(t_x/2)+1, or t_x+1 when terminal
  std::size_t vectors_rank = 0; // rank of chi, A_1 chi, ...
  std::size_t rank_B = 0;
  bool independent = false;
  bool bound_holds = false;     // num_vectors <= rank(B)
};

/// Certificate for the interval of `analysis` containing `interval`; throws
/// base_point_not_in_subset. Uses the coset graph when B is in coset mode.
RankCertificate rank_certificate(const AssociationScheme& scheme, std::span<const Vertex> subset,
                                 const OuterDistribution& B, Vertex base_point, const ZeroInterval& interval);

}  // namespace delsarte

#endif  // DELSARTE_REGULARITY_HPP

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

#ifndef DELSARTE_SCHEME_HPP
#define DELSARTE_SCHEME_HPP

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "delsarte/matrix.hpp"
#include "delsarte/number.hpp"

namespace delsarte {

enum class NumberMode { exact, approx };

const char* to_string(NumberMode mode) noexcept;

/// Zero tolerance for approximate spectral data. Tests compare |v| against
/// kEigenTolerance * scale, where scale is the largest magnitude in the object.
inline constexpr double kEigenTolerance = 1e-9;

/// Materialised relation matrix of an explicit scheme; entry (x, y) is the
/// relation index, 0 meaning x == y.
class RelationMatrix {
 public:
  RelationMatrix() = default;
  explicit RelationMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  static RelationMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t size() const noexcept { return n_; }
  std::uint8_t operator()(std::size_t x, std::size_t y) const { return data_[x * n_ + y]; }
  void set(std::size_t x, std::size_t y, std::uint8_t r) { data_[x * n_ + y] = r; }
  int max_relation() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Largest materialised scheme accepted by verify_scheme.
inline constexpr std::size_t kExplicitVertexLimit = 5000;

/// Intersection numbers p[i][j][k] of a d-class scheme.
class IntersectionNumbers {
 public:
  IntersectionNumbers() = default;
  explicit IntersectionNumbers(int d) : d_(d), values_((d + 1) * (d + 1) * (d + 1), 0) {}

  int num_classes() const noexcept { return d_; }
  std::int64_t operator()(int i, int j, int k) const { return values_[index(i, j, k)]; }
  std::int64_t& at(int i, int j, int k) { return values_[index(i, j, k)]; }
  /// k_i = p[i][i][0].
  std::vector<std::int64_t> valencies() const;

  friend bool operator==(const IntersectionNumbers&, const IntersectionNumbers&) = default;

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * (d_ + 1) + j) * (d_ + 1) + k;
  }
  int d_ = 0;
  std::vector<std::int64_t> values_;
};

/// Eigenmatrices. P(l, i) is the eigenvalue of A_i on the l-th common
/// eigenspace; Q(i, l) is the coefficient of A_i in |X| E_l.
struct Eigensystem {
  NumberMode mode = NumberMode::exact;
  RatMatrix P;  // exact mode only
  RatMatrix Q;  // exact mode only
  RealMatrix P_real;
  RealMatrix Q_real;
  std::vector<std::int64_t> multiplicities;
  double tolerance = 0.0;  // 0 in exact mode
};

/// Krein numbers in the normalisation E_i o E_j = (1/|X|) sum_k q[i][j][k] E_k.
class KreinNumbers {
 public:
  KreinNumbers() = default;
  KreinNumbers(int d, NumberMode mode);

  int num_classes() const noexcept { return d_; }
  NumberMode mode() const noexcept { return mode_; }
  double value(int i, int j, int k) const { return real_[index(i, j, k)]; }
  /// Exact mode only.
  const Rational& exact(int i, int j, int k) const;
  bool is_zero(int i, int j, int k) const;
  bool is_positive(int i, int j, int k) const { return !is_zero(i, j, k) && value(i, j, k) > 0; }
  double tolerance() const noexcept { return tolerance_; }

 private:
  friend KreinNumbers krein_numbers(const Eigensystem&, std::uint64_t);
  friend class AssociationScheme;
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * (d_ + 1) + j) * (d_ + 1) + k;
  }
  int d_ = 0;
  NumberMode mode_ = NumberMode::exact;
  std::vector<Rational> exact_;
  std::vector<double> real_;
  double tolerance_ = 0.0;
};

/// ordering[j] is the relation (P side) or eigenspace (Q side) placed at
/// position j; ordering[0] == 0 always.
struct PolynomialOrderings {
  std::optional<std::vector<int>> p;
  std::optional<std::vector<int>> q;
};

enum class Family { explicit_matrix, hamming, johnson };

struct VerifyOptions {
  /// Exhaustive triple counting when true; otherwise a reference pair per
  /// relation plus `sampled_triples` random triples.
  bool full = true;
  std::uint64_t sampled_triples = 1'000'000;
  std::uint64_t seed = 0x5eed;
};

struct VerificationReport {
  bool full = true;
  std::uint64_t pairs_checked = 0;
  std::uint64_t triples_checked = 0;
};

class AssociationScheme {
 public:
  int num_classes() const noexcept { return d_; }
  std::uint64_t num_vertices() const noexcept { return num_vertices_; }
  Family family() const noexcept { return family_; }
  /// Parameters of the named family: (n, q) for Hamming, (v, k) for Johnson.
  std::pair<int, int> family_parameters() const noexcept { return {param_a_, param_b_}; }
  std::string descriptor() const;

  /// Relation index of (x, y); throws on out-of-range vertices.
  int relation(Vertex x, Vertex y) const;

  /// Fast path used by the subset routines: vertices are first converted to
  /// keys (packed words for Hamming, bit masks for Johnson, indices otherwise).
  std::uint64_t key(Vertex x) const;
  int relation_of_keys(std::uint64_t a, std::uint64_t b) const {
    int raw;
    switch (family_) {
      case Family::hamming:
        raw = param_b_ == 2 ? std::popcount(a ^ b) : digit_distance(a, b);
        break;
      case Family::johnson:
        raw = param_b_ - std::popcount(a & b);
        break;
      default:
        raw = (*relations_)(a, b);
    }
    return relabel_.empty() ? raw : relabel_[raw];
  }
  void check_vertex(Vertex x) const;

  /// All y with relation(x, y) == i, ascending. Closed form for relation 1 of
  /// the named families; a scan over X otherwise.
  std::vector<Vertex> neighbors(Vertex x, int i) const;

  const IntersectionNumbers& intersection_numbers() const noexcept { return p_; }
  std::int64_t p(int i, int j, int k) const { return p_(i, j, k); }
  const std::vector<std::int64_t>& valencies() const noexcept { return valencies_; }

  const Eigensystem& eigensystem() const noexcept { return eigen_; }
  NumberMode number_mode() const noexcept { return eigen_.mode; }
  bool is_exact() const noexcept { return eigen_.mode == NumberMode::exact; }
  /// Exact eigenmatrices; throw inexact_scheme in approx mode.
  const RatMatrix& P() const;
  const RatMatrix& Q() const;
  const std::vector<std::int64_t>& multiplicities() const noexcept { return eigen_.multiplicities; }

  const KreinNumbers& krein() const noexcept { return krein_; }
  const PolynomialOrderings& orderings() const noexcept { return orderings_; }

  /// True when the presented relation (eigenspace) order is itself a
  /// P-polynomial (Q-polynomial) ordering.
  bool is_p_polynomial_as_ordered() const;
  bool is_q_polynomial_as_ordered() const;

  /// Relabel relations: new relation j is old relation order[j].
  AssociationScheme with_relation_order(const std::vector<int>& order) const;
  /// Relabel eigenspaces: new eigenspace j is old eigenspace order[j].
  AssociationScheme with_eigenspace_order(const std::vector<int>& order) const;
  /// Presented in the P- (Q-)polynomial ordering; throws not_polynomial_scheme.
  AssociationScheme in_p_order() const;
  AssociationScheme in_q_order() const;

  /// Non-null for explicit schemes.
  const RelationMatrix* relation_matrix() const noexcept { return relations_.get(); }

  const VerificationReport& verification() const noexcept { return verification_; }

 private:
  friend AssociationScheme verify_scheme(RelationMatrix, const VerifyOptions&);
  friend AssociationScheme scheme_from_verified(RelationMatrix, IntersectionNumbers,
                                                VerificationReport);
  friend AssociationScheme build_hamming(int, int);
  friend AssociationScheme build_johnson(int, int);

  AssociationScheme() = default;
  void finish_spectral();
  int digit_distance(std::uint64_t a, std::uint64_t b) const;

  int d_ = 0;
  std::uint64_t num_vertices_ = 0;
  Family family_ = Family::explicit_matrix;
  int param_a_ = 0;
  int param_b_ = 0;
  std::shared_ptr<const RelationMatrix> relations_;
  std::vector<int> relabel_;  // raw relation -> presented relation; empty means identity
  IntersectionNumbers p_;
  std::vector<std::int64_t> valencies_;
  Eigensystem eigen_;
  KreinNumbers krein_;
  PolynomialOrderings orderings_;
  VerificationReport verification_;
};

/// Checks the association-scheme axioms on an explicit relation matrix and
/// returns the scheme with its spectral data. Errors name the first violated axiom.
AssociationScheme verify_scheme(RelationMatrix relations, const VerifyOptions& options = {});

/// Builds a scheme from relations whose intersection numbers were already
/// established by the caller (used by the induced-scheme construction).
AssociationScheme scheme_from_verified(RelationMatrix relations, IntersectionNumbers p,
                                       VerificationReport report);

/// Triple counting over an explicit relation matrix. On success returns the
/// intersection numbers; throws inconsistent_intersection_number otherwise.
IntersectionNumbers count_intersection_numbers(const RelationMatrix& relations,
                                               const VerifyOptions& options,
                                               VerificationReport* report = nullptr);

/// Common eigenspaces of the Bose-Mesner algebra from the intersection
/// numbers. Exact when every eigenvalue is rational; otherwise approx.
Eigensystem eigensystem(const IntersectionNumbers& p, std::uint64_t num_vertices);

/// Eigensystem from given exact eigenmatrices (named families).
Eigensystem eigensystem_from_exact(RatMatrix P, std::uint64_t num_vertices);

KreinNumbers krein_numbers(const Eigensystem& eigen, std::uint64_t num_vertices);

/// Searches for P- and Q-polynomial orderings; each is the lexicographically
/// smallest valid ordering or absent.
PolynomialOrderings find_polynomial_orderings(const IntersectionNumbers& p,
                                              const KreinNumbers& q);

/// Tridiagonality test for a fixed ordering (exposed for tests).
bool is_p_polynomial_ordering(const IntersectionNumbers& p, const std::vector<int>& order);
bool is_q_polynomial_ordering(const KreinNumbers& q, const std::vector<int>& order);

}  // namespace delsarte

#endif  // DELSARTE_SCHEME_HPP

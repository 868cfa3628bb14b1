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


#ifndef DELSARTE_SPHERICAL_HPP
#define DELSARTE_SPHERICAL_HPP

#include <optional>
#include <vector>

#include "delsarte/induced.hpp"
#include "delsarte/matrix.hpp"
#include "delsarte/number.hpp"
#include "delsarte/polynomial.hpp"

namespace delsarte {

/// Tolerance on |<x,x> - 1| for floating point input, also used to reject duplicates.
inline constexpr double kNormTolerance = 1e-9;
/// Gap that separates two inner-product clusters in floating point mode.
inline constexpr double kDegreeTolerance = 1e-6;
/// Moment tolerance per point: b_k counts as zero when |b_k| <= kMomentTolerance * |X|.
inline constexpr double kMomentTolerance = 1e-8;

/// Q_k for the sphere S^{d-1}, normalised so that Q_k(1) is the dimension of
/// the degree-k harmonics. d >= 3.
Polynomial gegenbauer(int d, int k);
/// Q_0, ..., Q_K.
std::vector<Polynomial> gegenbauer_basis(int d, int K);
/// Q_0(x), ..., Q_K(x) through the three-term recurrence in double precision.
std::vector<double> gegenbauer_values(int d, int K, double x);
/// C(d+k-1, k) - C(d+k-3, k-2).
Integer harmonic_dimension(int d, int k);

/// Coefficients q_k(i,j) of Q_iQ_j in the basis {Q_k}, indexed by k = 0..i+j.
/// Throws PositivityViolation if the support is not |i-j| <= k <= i+j with k = i+j mod 2.
std::vector<Rational> linearization(int d, int i, int j);

enum class PointMode { exact, floating };

/// Finite subset of the unit sphere S^{d-1}.
class PointSet {
 public:
  static PointSet from_rational(std::vector<std::vector<Rational>> points);
  static PointSet from_real(std::vector<std::vector<double>> points);
  /// Exact inner products only; positive semidefiniteness is the caller's promise.
  static PointSet from_gram(int dimension, RatMatrix gram);

  int dimension() const noexcept { return d_; }
  std::size_t size() const noexcept { return n_; }
  PointMode mode() const noexcept { return mode_; }

  Rational inner_exact(std::size_t i, std::size_t j) const { return gram_(i, j); }
  double inner(std::size_t i, std::size_t j) const;

 private:
  int d_ = 0;
  std::size_t n_ = 0;
  PointMode mode_ = PointMode::exact;
  RatMatrix gram_;
  std::vector<double> coords_;  // row-major, floating mode only
};

struct Moments {
  PointMode mode = PointMode::exact;
  std::vector<Rational> exact;
  std::vector<double> real;
  /// Absolute zero tolerance (0 in exact mode).
  double tolerance = 0;

  int horizon() const { return static_cast<int>(mode == PointMode::exact ? exact.size() : real.size()) - 1; }
  bool is_zero(int k) const;
  double value(int k) const;
};

/// b_k = (1/|X|) sum_{x,y} Q_k(<x,y>) for k = 0..K.
Moments moments(const PointSet& X, int K);

/// True iff b_{w+1} = ... = b_{w+t} = 0.
bool design_check(const Moments& b, int w, int t);

struct DegreeSet {
  /// Distinct inner products of distinct points in descending order.
  std::vector<Rational> exact;
  std::vector<double> real;
  /// Class (1..s) of every ordered pair, 0 on the diagonal; row-major |X| x |X|.
  std::vector<std::uint8_t> classes;

  int degree() const { return static_cast<int>(exact.empty() ? real.size() : exact.size()); }
};

DegreeSet degree_set(const PointSet& X);

struct SphericalInterval {
  int w = 0;
  int t = 0;
  /// b_{w+t+1} was computed and is non-zero.
  bool closed = false;
};

struct SphericalBound {
  SphericalInterval interval;
  int bound = 0;  // 2s
  bool satisfied = true;
  /// 2s - 1 <= t
  bool sint = false;
};

struct SphericalReport {
  PointMode mode = PointMode::exact;
  int dimension = 0;
  std::size_t size = 0;
  Moments moments;
  DegreeSet degrees;
  std::vector<SphericalInterval> intervals;
  std::vector<SphericalBound> bounds;
  /// Present when some closed interval has 2s - 1 <= t.
  std::optional<InducedScheme> induced;
};

/// Maximal runs of zeros in b_1..b_K.
std::vector<SphericalInterval> spherical_intervals(const Moments& b);

/// Moments, degree set, intervals and bounds. A closed interval with t > 2s
/// raises BoundViolation; one with 2s - 1 <= t triggers certification of the
/// scheme on X whose relations are the inner-product classes.
SphericalReport spherical_analysis(const PointSet& X, int K, const InducedOptions& options = {});

/// Relation matrix of X by inner-product class.
RelationMatrix spherical_relations(const DegreeSet& degrees, std::size_t n);

struct ScarCheck {
  std::vector<Rational> f;  // coefficients in {Q_k}
  PointMode mode = PointMode::exact;
  Rational lhs_exact, rhs_exact, residual_exact;
  double lhs = 0, rhs = 0, residual = 0;
  double tolerance = 0;
  bool holds = false;
};

/// Checks F(1) = sum_k f_k b_k for an annihilator F of X.
ScarCheck verify_scar(const PointSet& X, const Polynomial& F);

}  // namespace delsarte

#endif  // DELSARTE_SPHERICAL_HPP

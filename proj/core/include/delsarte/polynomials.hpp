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


#ifndef DELSARTE_POLYNOMIALS_HPP
#define DELSARTE_POLYNOMIALS_HPP

#include <optional>
#include <vector>

#include "delsarte/distributions.hpp"
#include "delsarte/matrix.hpp"
#include "delsarte/polynomial.hpp"
#include "delsarte/scheme.hpp"

namespace delsarte {

/// v_0..v_d of a P-polynomial scheme (dual = false) or v*_0..v*_d of a
/// Q-polynomial scheme (dual = true), in the scheme's presented order.
struct OrthoPolySystem {
  bool dual = false;
  std::vector<Polynomial> v;
  /// Primal: theta_l = P(l,1). Dual: theta*_i = Q(i,1).
  std::vector<Rational> grid;
  /// values(l, i) = v_i(grid[l]); equals P (primal) or Q (dual).
  RatMatrix values;
  /// x v_i = lower_i v_{i-1} + diagonal_i v_i + upper_i v_{i+1}, read off
  /// p[1][i][k] (or q[1][i][k]) at k = i-1, i, i+1.
  std::vector<Rational> lower, diagonal, upper;
};

/// Throws not_polynomial_scheme unless the presented order is polynomial.
OrthoPolySystem drg_ortho_polys(const AssociationScheme& scheme, bool dual);

struct AnnihilatorPoly {
  bool dual = false;
  std::vector<int> roots;           // grid indices
  Polynomial poly;                  // prod (x - theta_i) / (theta_0 - theta_i)
  std::vector<Rational> expansion;  // coefficients in v_0..v_d
};

AnnihilatorPoly annihilator_from_roots(const OrthoPolySystem& system, std::vector<int> roots);

/// Coefficients f with F(theta) = sum_k f_k v_k(theta) on the grid, for any
/// degree: f = (1/|X|) Q F(theta) (primal) or (1/|X|) P F(theta*) (dual).
std::vector<Rational> expand_on_grid(const AssociationScheme& scheme, const OrthoPolySystem& system,
                                     const Polynomial& F);

/// F(theta_0)|C|/|X| - sum f_k a_k; throws not_annihilator unless F vanishes
/// on the dual degree set.
Rational verify_pcar(const AssociationScheme& scheme, const SubsetAnalysis& analysis,
                     const OrthoPolySystem& primal, const Polynomial& F, const std::vector<Rational>& f);
Rational verify_pcar(const AssociationScheme& scheme, const SubsetAnalysis& analysis,
                     const OrthoPolySystem& primal, const AnnihilatorPoly& F);

/// F(theta*_0) - sum f_k b_k; throws not_annihilator unless F vanishes on the degree set.
Rational verify_qcar(const AssociationScheme& scheme, const SubsetAnalysis& analysis,
                     const OrthoPolySystem& dual, const Polynomial& F, const std::vector<Rational>& f);
Rational verify_qcar(const AssociationScheme& scheme, const SubsetAnalysis& analysis,
                     const OrthoPolySystem& dual, const AnnihilatorPoly& F);

/// G = v_m F with m = w + s* + 1 for the annihilator F of the dual degree set.
struct BoundPolynomial {
  ZeroInterval interval;
  int m = 0;
  AnnihilatorPoly F;
  Polynomial G;
  std::vector<Rational> g_grid;        // expansion of G on the grid
  std::vector<Rational> g_linearized;  // g_k = sum_j f_j p[m][j][k]
  Rational residual;                   // annihilator-identity residual of G
  bool low_coefficients_vanish = true; // g_k = 0 for k <= w
};

/// nullopt when m > d (the bound then follows from t <= d - w <= s*).
std::optional<BoundPolynomial> bound_polynomial(const AssociationScheme& scheme, const SubsetAnalysis& analysis,
                                                const OrthoPolySystem& primal, const ZeroInterval& interval);

/// Coefficients of v_i v_j in the basis {v_k} (exact, via the graded basis).
std::vector<Rational> linearize(const OrthoPolySystem& system, int i, int j);

}  // namespace delsarte

#endif  // DELSARTE_POLYNOMIALS_HPP

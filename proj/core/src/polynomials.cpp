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


#include "delsarte/polynomials.hpp"

#include <algorithm>

#include "delsarte/errors.hpp"

namespace delsarte {

namespace {

Rational x_of(const AssociationScheme& s) { return Rational(Integer(std::to_string(s.num_vertices()))); }

}  // namespace

OrthoPolySystem drg_ortho_polys(const AssociationScheme& scheme, bool dual) {
  const int d = scheme.num_classes();
  if (dual ? !scheme.is_q_polynomial_as_ordered() : !scheme.is_p_polynomial_as_ordered())
    fail(ErrorCode::not_polynomial_scheme,
         scheme.descriptor() + (dual ? " is not Q-polynomial in its presented eigenspace order"
                                     : " is not P-polynomial in its presented relation order"));
  const RatMatrix& M = dual ? scheme.Q() : scheme.P();
  auto coef = [&](int i, int k) -> Rational {
    return dual ? scheme.krein().exact(1, i, k) : Rational(static_cast<long>(scheme.p(1, i, k)));
  };
  OrthoPolySystem sys;
  sys.dual = dual;
  sys.lower.assign(d + 1, 0);
  sys.diagonal.assign(d + 1, 0);
  sys.upper.assign(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    sys.diagonal[i] = coef(i, i);
    if (i < d) sys.upper[i] = coef(i, i + 1);
    if (i > 0) sys.lower[i] = coef(i, i - 1);
  }
  sys.v.push_back(Polynomial::constant(1));
  if (d >= 1) sys.v.push_back(Polynomial::monomial(1));
  const Polynomial x = Polynomial::monomial(1);
  for (int i = 1; i < d; ++i) {
    Polynomial next = x * sys.v[i] - sys.diagonal[i] * sys.v[i] - sys.lower[i] * sys.v[i - 1];
    next *= Rational(1) / sys.upper[i];
    sys.v.push_back(std::move(next));
  }
  sys.grid.resize(d + 1);
  for (int l = 0; l <= d; ++l) sys.grid[l] = M(l, 1);
  sys.values = RatMatrix(d + 1, d + 1);
  for (int l = 0; l <= d; ++l)
    for (int i = 0; i <= d; ++i) {
      sys.values(l, i) = sys.v[i](sys.grid[l]);
      if (sys.values(l, i) != M(l, i))
        fail(ErrorCode::not_polynomial_scheme, "recurrence does not reproduce the eigenmatrix at (" +
                                                   std::to_string(l) + "," + std::to_string(i) + ")");
    }
  return sys;
}

AnnihilatorPoly annihilator_from_roots(const OrthoPolySystem& system, std::vector<int> roots) {
  const int d = static_cast<int>(system.grid.size()) - 1;
  std::sort(roots.begin(), roots.end());
  for (std::size_t r = 0; r < roots.size(); ++r) {
    if (roots[r] < 1 || roots[r] > d)
      fail(ErrorCode::parameter_out_of_range, "root index " + std::to_string(roots[r]) + " not in 1..d");
    if (r > 0 && roots[r] == roots[r - 1]) fail(ErrorCode::repeated_root, "root index repeated");
  }
  AnnihilatorPoly F;
  F.dual = system.dual;
  F.roots = roots;
  F.poly = Polynomial::constant(1);
  const Rational& t0 = system.grid[0];
  for (int r : roots) {
    const Rational& tr = system.grid[r];
    if (tr == t0) fail(ErrorCode::repeated_root, "root coincides with the principal value");
    F.poly = F.poly * Polynomial::linear_factor(tr);
    F.poly *= Rational(1) / (t0 - tr);
  }
  if (F.poly.degree() > d) fail(ErrorCode::parameter_out_of_range, "annihilator degree exceeds d");
  F.expansion = expand_in_graded_basis(F.poly, system.v);
  F.expansion.resize(d + 1, Rational(0));
  return F;
}

std::vector<Rational> expand_on_grid(const AssociationScheme& scheme, const OrthoPolySystem& system,
                                     const Polynomial& F) {
  const int d = scheme.num_classes();
  const RatMatrix& M = system.dual ? scheme.P() : scheme.Q();
  std::vector<Rational> values(d + 1);
  for (int l = 0; l <= d; ++l) values[l] = F(system.grid[l]);
  const Rational X = x_of(scheme);
  std::vector<Rational> f(d + 1);
  for (int k = 0; k <= d; ++k) {
    Rational s = 0;
    for (int l = 0; l <= d; ++l) s += M(k, l) * values[l];
    f[k] = s / X;
  }
  return f;
}

namespace {

void require_vanishing(const OrthoPolySystem& sys, const Polynomial& F, const std::vector<int>& where,
                       const char* what) {
  for (int i : where)
    if (F(sys.grid[i]) != 0)
      fail(ErrorCode::not_annihilator,
           std::string("polynomial does not vanish on the ") + what + " at index " + std::to_string(i));
}

Rational dot(const std::vector<Rational>& f, const std::vector<Rational>& v) {
  Rational s = 0;
  for (std::size_t k = 0; k < std::min(f.size(), v.size()); ++k)
    if (f[k] != 0 && v[k] != 0) s += f[k] * v[k];
  return s;
}

}  // namespace

Rational verify_pcar(const AssociationScheme& scheme, const SubsetAnalysis& an, const OrthoPolySystem& primal,
                     const Polynomial& F, const std::vector<Rational>& f) {
  if (primal.dual) fail(ErrorCode::invalid_input, "P-side identity needs the primal system");
  require_vanishing(primal, F, an.dual_degree_set, "dual degree set");
  const Rational lhs = F(primal.grid[0]) * Rational(Integer(std::to_string(an.subset_size))) / x_of(scheme);
  return lhs - dot(f, an.inner);
}

Rational verify_pcar(const AssociationScheme& scheme, const SubsetAnalysis& an, const OrthoPolySystem& primal,
                     const AnnihilatorPoly& F) {
  return verify_pcar(scheme, an, primal, F.poly, F.expansion);
}

Rational verify_qcar(const AssociationScheme& scheme, const SubsetAnalysis& an, const OrthoPolySystem& dual,
                     const Polynomial& F, const std::vector<Rational>& f) {
  (void)scheme;
  if (!dual.dual) fail(ErrorCode::invalid_input, "Q-side identity needs the dual system");
  require_vanishing(dual, F, an.degree_set, "degree set");
  return F(dual.grid[0]) - dot(f, an.dual);
}

Rational verify_qcar(const AssociationScheme& scheme, const SubsetAnalysis& an, const OrthoPolySystem& dual,
                     const AnnihilatorPoly& F) {
  return verify_qcar(scheme, an, dual, F.poly, F.expansion);
}

std::optional<BoundPolynomial> bound_polynomial(const AssociationScheme& scheme, const SubsetAnalysis& an,
                                                const OrthoPolySystem& primal, const ZeroInterval& interval) {
  const int d = scheme.num_classes();
  const int m = interval.w + an.dual_degree + 1;
  if (m > d) return std::nullopt;
  BoundPolynomial out;
  out.interval = interval;
  out.m = m;
  out.F = annihilator_from_roots(primal, an.dual_degree_set);
  out.G = primal.v[m] * out.F.poly;
  out.g_grid = expand_on_grid(scheme, primal, out.G);
  out.g_linearized.assign(d + 1, Rational(0));
  for (int k = 0; k <= d; ++k)
    for (int j = 0; j <= an.dual_degree; ++j)
      if (out.F.expansion[j] != 0) out.g_linearized[k] += out.F.expansion[j] * Rational(static_cast<long>(scheme.p(m, j, k)));
  for (int k = 0; k <= interval.w; ++k)
    if (out.g_grid[k] != 0) out.low_coefficients_vanish = false;
  out.residual = verify_pcar(scheme, an, primal, out.G, out.g_grid);
  return out;
}

std::vector<Rational> linearize(const OrthoPolySystem& system, int i, int j) {
  const int d = static_cast<int>(system.v.size()) - 1;
  const Polynomial prod = system.v[i] * system.v[j];
  if (prod.degree() > d) fail(ErrorCode::parameter_out_of_range, "product degree exceeds d");
  auto f = expand_in_graded_basis(prod, system.v);
  f.resize(d + 1, Rational(0));
  return f;
}

}  // namespace delsarte

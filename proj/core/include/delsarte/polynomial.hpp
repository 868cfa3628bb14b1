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

#ifndef DELSARTE_POLYNOMIAL_HPP
#define DELSARTE_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "delsarte/number.hpp"

namespace delsarte {

/// Univariate polynomial with exact rational coefficients, lowest degree first.
/// The zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(int degree, const Rational& c = 1);
  /// (x - root)
  static Polynomial linear_factor(const Rational& root);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of x^i (zero beyond the degree).
  Rational coefficient(int i) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Writes `target` in the basis `basis`, where basis[k] has degree exactly k.
/// Requires target.degree() < basis.size(). Back-substitution from the top degree.
std::vector<Rational> expand_in_graded_basis(const Polynomial& target,
                                             const std::vector<Polynomial>& basis);

}  // namespace delsarte

#endif  // DELSARTE_POLYNOMIAL_HPP

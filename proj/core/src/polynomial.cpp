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

#include "delsarte/polynomial.hpp"

#include <sstream>

#include "delsarte/errors.hpp"

namespace delsarte {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_factor(const Rational& root) {
  return Polynomial(std::vector<Rational>{-root, Rational(1)});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

Rational Polynomial::leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const bool unit = mag == 1;
    if (!unit || i == 0) os << delsarte::to_string(mag);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::vector<Rational> expand_in_graded_basis(const Polynomial& target,
                                             const std::vector<Polynomial>& basis) {
  const int n = static_cast<int>(basis.size());
  if (target.degree() >= n)
    fail(ErrorCode::parameter_out_of_range, "polynomial degree exceeds the basis");
  std::vector<Rational> f(n, Rational(0));
  Polynomial rest = target;
  for (int k = target.degree(); k >= 0; --k) {
    if (basis[k].degree() != k) fail(ErrorCode::invalid_input, "basis is not graded");
    const Rational c = rest.coefficient(k) / basis[k].leading_coefficient();
    if (c == 0) continue;
    f[k] = c;
    rest -= basis[k] * c;
  }
  return f;
}

}  // namespace delsarte

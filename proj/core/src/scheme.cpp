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

#include "delsarte/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "delsarte/errors.hpp"
#include "delsarte/named_schemes.hpp"

namespace delsarte {

const char* to_string(NumberMode mode) noexcept { return mode == NumberMode::exact ? "EXACT" : "APPROX"; }

RelationMatrix RelationMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  if (n > kExplicitVertexLimit)
    fail(ErrorCode::scheme_too_large, "explicit schemes are limited to " + std::to_string(kExplicitVertexLimit) + " vertices");
  RelationMatrix m(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (rows[x].size() != n) fail(ErrorCode::invalid_input, "relation matrix is not square (row " + std::to_string(x) + ")");
    for (std::size_t y = 0; y < n; ++y) {
      const int r = rows[x][y];
      if (r < 0 || r > 255)
        fail(ErrorCode::invalid_input, "relation index out of range at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      m.set(x, y, static_cast<std::uint8_t>(r));
    }
  }
  return m;
}

int RelationMatrix::max_relation() const {
  int m = 0;
  for (auto r : data_) m = std::max<int>(m, r);
  return m;
}

std::vector<std::int64_t> IntersectionNumbers::valencies() const {
  std::vector<std::int64_t> k(d_ + 1);
  for (int i = 0; i <= d_; ++i) k[i] = (*this)(i, i, 0);
  return k;
}

KreinNumbers::KreinNumbers(int d, NumberMode mode) : d_(d), mode_(mode) {
  const std::size_t n = static_cast<std::size_t>(d + 1) * (d + 1) * (d + 1);
  real_.assign(n, 0.0);
  if (mode == NumberMode::exact) exact_.assign(n, Rational(0));
}

const Rational& KreinNumbers::exact(int i, int j, int k) const {
  if (mode_ != NumberMode::exact) fail(ErrorCode::inexact_scheme, "Krein numbers are approximate");
  return exact_[index(i, j, k)];
}

bool KreinNumbers::is_zero(int i, int j, int k) const {
  if (mode_ == NumberMode::exact) return exact_[index(i, j, k)] == 0;
  return std::abs(real_[index(i, j, k)]) <= tolerance_;
}

std::string AssociationScheme::descriptor() const {
  std::ostringstream os;
  switch (family_) {
    case Family::hamming: os << "H(" << param_a_ << "," << param_b_ << ")"; break;
    case Family::johnson: os << "J(" << param_a_ << "," << param_b_ << ")"; break;
    default: os << "explicit(|X|=" << num_vertices_ << ",d=" << d_ << ")";
  }
  return os.str();
}

void AssociationScheme::check_vertex(Vertex x) const {
  if (x >= num_vertices_)
    fail(ErrorCode::vertex_out_of_range, "vertex " + std::to_string(x) + " not in 0.." + std::to_string(num_vertices_ - 1));
}

std::uint64_t AssociationScheme::key(Vertex x) const {
  check_vertex(x);
  if (family_ == Family::johnson) return johnson_unrank(param_a_, param_b_, x);
  return x;
}

int AssociationScheme::relation(Vertex x, Vertex y) const { return relation_of_keys(key(x), key(y)); }

std::vector<Vertex> AssociationScheme::neighbors(Vertex x, int i) const {
  check_vertex(x);
  std::vector<Vertex> out;
  int raw = i;
  if (!relabel_.empty()) raw = static_cast<int>(std::find(relabel_.begin(), relabel_.end(), i) - relabel_.begin());
  if (raw == 1 && family_ == Family::hamming) {
    const auto q = static_cast<Vertex>(param_b_);
    Vertex place = 1;
    for (int pos = 0; pos < param_a_; ++pos, place *= q) {
      const Vertex digit = (x / place) % q;
      for (Vertex c = 0; c < q; ++c)
        if (c != digit) out.push_back(x - digit * place + c * place);
    }
  } else if (raw == 1 && family_ == Family::johnson) {
    const std::uint64_t mask = key(x);
    const std::uint64_t full = param_a_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << param_a_) - 1;
    for (std::uint64_t in = mask; in; in &= in - 1)
      for (std::uint64_t outside = full & ~mask; outside; outside &= outside - 1) {
        const std::uint64_t m = (mask & ~(in & -in)) | (outside & -outside);
        out.push_back(johnson_rank(param_a_, param_b_, m));
      }
  } else {
    for (Vertex y = 0; y < num_vertices_; ++y)
      if (relation(x, y) == i) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int AssociationScheme::digit_distance(std::uint64_t a, std::uint64_t b) const {
  const auto q = static_cast<std::uint64_t>(param_b_);
  int dist = 0;
  for (int i = 0; i < param_a_; ++i) {
    dist += (a % q) != (b % q);
    a /= q;
    b /= q;
  }
  return dist;
}

const RatMatrix& AssociationScheme::P() const {
  if (!is_exact()) fail(ErrorCode::inexact_scheme, descriptor() + " has irrational eigenvalues");
  return eigen_.P;
}

const RatMatrix& AssociationScheme::Q() const {
  if (!is_exact()) fail(ErrorCode::inexact_scheme, descriptor() + " has irrational eigenvalues");
  return eigen_.Q;
}

namespace {

std::vector<int> identity_order(int d) {
  std::vector<int> v(d + 1);
  for (int i = 0; i <= d; ++i) v[i] = i;
  return v;
}

void check_permutation(const std::vector<int>& order, int d) {
  if (static_cast<int>(order.size()) != d + 1 || order[0] != 0)
    fail(ErrorCode::invalid_input, "ordering must list 0..d with 0 first");
  std::vector<bool> seen(d + 1, false);
  for (int v : order) {
    if (v < 0 || v > d || seen[v]) fail(ErrorCode::invalid_input, "ordering is not a permutation");
    seen[v] = true;
  }
}

}  // namespace

bool AssociationScheme::is_p_polynomial_as_ordered() const {
  return is_p_polynomial_ordering(p_, identity_order(d_));
}

bool AssociationScheme::is_q_polynomial_as_ordered() const {
  return is_q_polynomial_ordering(krein_, identity_order(d_));
}

AssociationScheme AssociationScheme::with_relation_order(const std::vector<int>& order) const {
  check_permutation(order, d_);
  AssociationScheme s = *this;
  std::vector<int> pos(d_ + 1);
  for (int j = 0; j <= d_; ++j) pos[order[j]] = j;
  std::vector<int> relabel(d_ + 1);
  for (int raw = 0; raw <= d_; ++raw) relabel[raw] = pos[relabel_.empty() ? raw : relabel_[raw]];
  s.relabel_ = relabel;
  for (int i = 0; i <= d_; ++i)
    for (int j = 0; j <= d_; ++j)
      for (int k = 0; k <= d_; ++k) s.p_.at(i, j, k) = p_(order[i], order[j], order[k]);
  s.valencies_ = s.p_.valencies();
  auto& e = s.eigen_;
  for (int l = 0; l <= d_; ++l)
    for (int j = 0; j <= d_; ++j) {
      if (e.mode == NumberMode::exact) {
        e.P(l, j) = eigen_.P(l, order[j]);
        e.Q(j, l) = eigen_.Q(order[j], l);
      }
      e.P_real(l, j) = eigen_.P_real(l, order[j]);
      e.Q_real(j, l) = eigen_.Q_real(order[j], l);
    }
  s.orderings_ = find_polynomial_orderings(s.p_, s.krein_);
  return s;
}

AssociationScheme AssociationScheme::with_eigenspace_order(const std::vector<int>& order) const {
  check_permutation(order, d_);
  AssociationScheme s = *this;
  auto& e = s.eigen_;
  for (int l = 0; l <= d_; ++l) {
    e.multiplicities[l] = eigen_.multiplicities[order[l]];
    for (int j = 0; j <= d_; ++j) {
      if (e.mode == NumberMode::exact) {
        e.P(l, j) = eigen_.P(order[l], j);
        e.Q(j, l) = eigen_.Q(j, order[l]);
      }
      e.P_real(l, j) = eigen_.P_real(order[l], j);
      e.Q_real(j, l) = eigen_.Q_real(j, order[l]);
    }
  }
  for (int i = 0; i <= d_; ++i)
    for (int j = 0; j <= d_; ++j)
      for (int k = 0; k <= d_; ++k) {
        const auto dst = s.krein_.index(i, j, k);
        const auto src = krein_.index(order[i], order[j], order[k]);
        s.krein_.real_[dst] = krein_.real_[src];
        if (krein_.mode_ == NumberMode::exact) s.krein_.exact_[dst] = krein_.exact_[src];
      }
  s.orderings_ = find_polynomial_orderings(s.p_, s.krein_);
  return s;
}

AssociationScheme AssociationScheme::in_p_order() const {
  if (!orderings_.p) fail(ErrorCode::not_polynomial_scheme, descriptor() + " is not P-polynomial");
  return is_p_polynomial_as_ordered() ? *this : with_relation_order(*orderings_.p);
}

AssociationScheme AssociationScheme::in_q_order() const {
  if (!orderings_.q) fail(ErrorCode::not_polynomial_scheme, descriptor() + " is not Q-polynomial");
  return is_q_polynomial_as_ordered() ? *this : with_eigenspace_order(*orderings_.q);
}

void AssociationScheme::finish_spectral() {
  krein_ = krein_numbers(eigen_, num_vertices_);
  orderings_ = find_polynomial_orderings(p_, krein_);
}

bool is_p_polynomial_ordering(const IntersectionNumbers& p, const std::vector<int>& order) {
  const int d = p.num_classes();
  if (static_cast<int>(order.size()) != d + 1 || order[0] != 0) return false;
  if (d == 0) return true;
  const int a = order[1];
  for (int j = 0; j <= d; ++j)
    for (int k = 0; k <= d; ++k) {
      const auto v = p(a, order[j], order[k]);
      const int gap = std::abs(j - k);
      if (gap > 1 && v != 0) return false;
      if (gap == 1 && v <= 0) return false;
    }
  return true;
}

bool is_q_polynomial_ordering(const KreinNumbers& q, const std::vector<int>& order) {
  const int d = q.num_classes();
  if (static_cast<int>(order.size()) != d + 1 || order[0] != 0) return false;
  if (d == 0) return true;
  const int a = order[1];
  for (int j = 0; j <= d; ++j)
    for (int k = 0; k <= d; ++k) {
      const int gap = std::abs(j - k);
      if (gap > 1 && !q.is_zero(a, order[j], order[k])) return false;
      if (gap == 1 && !q.is_positive(a, order[j], order[k])) return false;
    }
  return true;
}

namespace {

/// Depth-first search in lexicographic order. `adjacent(a, u, v)` says the
/// first class a links u to v; the full tridiagonal test runs at the leaves.
std::optional<std::vector<int>> search_ordering(
    int d, const std::function<bool(int, int, int)>& adjacent,
    const std::function<bool(const std::vector<int>&)>& valid) {
  std::vector<int> order{0};
  std::vector<bool> used(d + 1, false);
  used[0] = true;
  std::function<bool(int)> extend = [&](int a) -> bool {
    if (static_cast<int>(order.size()) == d + 1) return valid(order);
    const int last = order.back();
    for (int v = 1; v <= d; ++v) {
      if (used[v] || !adjacent(a, last, v)) continue;
      used[v] = true;
      order.push_back(v);
      if (extend(a)) return true;
      order.pop_back();
      used[v] = false;
    }
    return false;
  };
  for (int a = 1; a <= d; ++a) {
    used[a] = true;
    order.push_back(a);
    if (extend(a)) return order;
    order.pop_back();
    used[a] = false;
  }
  if (d == 0) return order;
  return std::nullopt;
}

}  // namespace

PolynomialOrderings find_polynomial_orderings(const IntersectionNumbers& p, const KreinNumbers& q) {
  const int d = p.num_classes();
  PolynomialOrderings out;
  out.p = search_ordering(
      d, [&](int a, int u, int v) { return p(a, u, v) > 0; },
      [&](const std::vector<int>& o) { return is_p_polynomial_ordering(p, o); });
  out.q = search_ordering(
      d, [&](int a, int u, int v) { return q.is_positive(a, u, v); },
      [&](const std::vector<int>& o) { return is_q_polynomial_ordering(q, o); });
  return out;
}

}  // namespace delsarte

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


#include "delsarte/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "delsarte/concurrency.hpp"
#include "delsarte/errors.hpp"

namespace delsarte {

namespace {

void require_dimension(int d) {
  if (d < 3) fail(ErrorCode::dimension_too_small, "spherical analysis needs d >= 3, got " + std::to_string(d));
}

/// Fixed-shape pairwise summation; the result does not depend on the thread count.
double tree_sum(const double* v, std::size_t n) {
  if (n == 0) return 0;
  if (n <= 8) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return tree_sum(v, h) + tree_sum(v + h, n - h);
}

Rational ratio(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<Polynomial> gegenbauer_basis(int d, int K) {
  require_dimension(d);
  if (K < 0) fail(ErrorCode::parameter_out_of_range, "negative Gegenbauer degree");
  std::vector<Polynomial> Q;
  Q.push_back(Polynomial::constant(1));
  if (K >= 1) Q.push_back(Polynomial::monomial(1, d));
  const Polynomial x = Polynomial::monomial(1);
  for (int k = 1; k < K; ++k) {
    // (k+1)/(d+2k) Q_{k+1} = x Q_k - (d+k-3)/(d+2k-4) Q_{k-1}
    Polynomial next = x * Q[k] - Q[k - 1] * ratio(d + k - 3, d + 2 * k - 4);
    Q.push_back(next * ratio(d + 2 * k, k + 1));
  }
  return Q;
}

Polynomial gegenbauer(int d, int k) { return gegenbauer_basis(d, k).back(); }

std::vector<double> gegenbauer_values(int d, int K, double x) {
  require_dimension(d);
  std::vector<double> q(K + 1);
  q[0] = 1;
  if (K >= 1) q[1] = d * x;
  for (int k = 1; k < K; ++k)
    q[k + 1] = (x * q[k] - double(d + k - 3) / double(d + 2 * k - 4) * q[k - 1]) * double(d + 2 * k) / double(k + 1);
  return q;
}

Integer harmonic_dimension(int d, int k) {
  require_dimension(d);
  return binomial(d + k - 1, k) - binomial(d + k - 3, k - 2);
}

std::vector<Rational> linearization(int d, int i, int j) {
  if (i < 0 || j < 0) fail(ErrorCode::parameter_out_of_range, "negative Gegenbauer degree");
  const auto basis = gegenbauer_basis(d, i + j);
  const auto q = expand_in_graded_basis(basis[i] * basis[j], basis);
  for (int k = 0; k <= i + j; ++k) {
    const bool expected = k >= std::abs(i - j) && (i + j - k) % 2 == 0;
    if ((q[k] > 0) != expected || q[k] < 0)
      fail(ErrorCode::positivity_violation, "q_" + std::to_string(k) + "(" + std::to_string(i) + "," +
                                                std::to_string(j) + ") = " + to_string(q[k]) + " in d = " +
                                                std::to_string(d));
  }
  return q;
}

PointSet PointSet::from_rational(std::vector<std::vector<Rational>> points) {
  if (points.empty()) fail(ErrorCode::invalid_input, "empty point set");
  const int d = static_cast<int>(points.front().size());
  require_dimension(d);
  const std::size_t n = points.size();
  RatMatrix gram(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (static_cast<int>(points[a].size()) != d)
      fail(ErrorCode::invalid_input, "point " + std::to_string(a + 1) + " has the wrong dimension");
    for (std::size_t b = a; b < n; ++b) {
      Rational s = 0;
      for (int c = 0; c < d; ++c) s += points[a][c] * points[b][c];
      gram(a, b) = gram(b, a) = s;
    }
  }
  return from_gram(d, std::move(gram));
}

PointSet PointSet::from_gram(int dimension, RatMatrix gram) {
  require_dimension(dimension);
  const std::size_t n = gram.rows();
  if (n == 0 || gram.cols() != n) fail(ErrorCode::invalid_input, "Gram matrix must be square and non-empty");
  for (std::size_t a = 0; a < n; ++a) {
    if (gram(a, a) != 1) fail(ErrorCode::invalid_input, "point " + std::to_string(a + 1) + " is not a unit vector");
    for (std::size_t b = a + 1; b < n; ++b) {
      if (gram(a, b) != gram(b, a)) fail(ErrorCode::invalid_input, "Gram matrix is not symmetric");
      if (gram(a, b) == 1)
        fail(ErrorCode::invalid_input, "points " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " coincide");
      if (gram(a, b) < -1 || gram(a, b) > 1) fail(ErrorCode::invalid_input, "inner product outside [-1, 1]");
    }
  }
  PointSet X;
  X.d_ = dimension;
  X.n_ = n;
  X.mode_ = PointMode::exact;
  X.gram_ = std::move(gram);
  return X;
}

PointSet PointSet::from_real(std::vector<std::vector<double>> points) {
  if (points.empty()) fail(ErrorCode::invalid_input, "empty point set");
  const int d = static_cast<int>(points.front().size());
  require_dimension(d);
  PointSet X;
  X.d_ = d;
  X.n_ = points.size();
  X.mode_ = PointMode::floating;
  X.coords_.reserve(X.n_ * d);
  for (std::size_t a = 0; a < X.n_; ++a) {
    if (static_cast<int>(points[a].size()) != d)
      fail(ErrorCode::invalid_input, "point " + std::to_string(a + 1) + " has the wrong dimension");
    X.coords_.insert(X.coords_.end(), points[a].begin(), points[a].end());
  }
  for (std::size_t a = 0; a < X.n_; ++a) {
    if (std::abs(X.inner(a, a) - 1) > kNormTolerance)
      fail(ErrorCode::invalid_input, "point " + std::to_string(a + 1) + " is not a unit vector");
    for (std::size_t b = a + 1; b < X.n_; ++b)
      if (X.inner(a, b) > 1 - kNormTolerance)
        fail(ErrorCode::invalid_input, "points " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " coincide");
  }
  return X;
}

double PointSet::inner(std::size_t i, std::size_t j) const {
  if (mode_ == PointMode::exact) return gram_(i, j).get_d();
  const double* a = coords_.data() + i * d_;
  const double* b = coords_.data() + j * d_;
  double s = 0;
  for (int c = 0; c < d_; ++c) s += a[c] * b[c];
  return s;
}

bool Moments::is_zero(int k) const {
  if (mode == PointMode::exact) return exact.at(k) == 0;
  return std::abs(real.at(k)) <= tolerance;
}

double Moments::value(int k) const { return mode == PointMode::exact ? exact.at(k).get_d() : real.at(k); }

Moments moments(const PointSet& X, int K) {
  if (K < 0) fail(ErrorCode::parameter_out_of_range, "negative moment horizon");
  const std::size_t n = X.size();
  const int d = X.dimension();
  Moments b;
  b.mode = X.mode();
  if (X.mode() == PointMode::exact) {
    std::map<Rational, long> counts;
    counts[Rational(1)] = static_cast<long>(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = a + 1; c < n; ++c) counts[X.inner_exact(a, c)] += 2;
    const auto basis = gegenbauer_basis(d, K);
    const Rational size(static_cast<long>(n));
    for (int k = 0; k <= K; ++k) {
      Rational s = 0;
      for (const auto& [alpha, m] : counts) s += basis[k](alpha) * m;
      s /= size;
      if (s < 0) fail(ErrorCode::negative_moment, "b_" + std::to_string(k) + " = " + to_string(s));
      b.exact.push_back(s);
    }
    return b;
  }
  b.tolerance = kMomentTolerance * static_cast<double>(n);
  // rows[k * n + x] = sum_y Q_k(<x,y>)
  std::vector<double> rows(static_cast<std::size_t>(K + 1) * n);
  parallel_chunks(n, std::min<std::size_t>(n, 64), [&](std::size_t, std::size_t begin, std::size_t end) {
    std::vector<double> col(n);
    std::vector<std::vector<double>> vals(n);
    for (std::size_t x = begin; x < end; ++x) {
      for (std::size_t y = 0; y < n; ++y) vals[y] = gegenbauer_values(d, K, X.inner(x, y));
      for (int k = 0; k <= K; ++k) {
        for (std::size_t y = 0; y < n; ++y) col[y] = vals[y][k];
        rows[k * n + x] = tree_sum(col.data(), n);
      }
    }
  });
  for (int k = 0; k <= K; ++k) {
    double s = tree_sum(rows.data() + k * n, n) / static_cast<double>(n);
    if (s < -b.tolerance) fail(ErrorCode::negative_moment, "b_" + std::to_string(k) + " = " + std::to_string(s));
    if (s < 0) s = 0;
    b.real.push_back(s);
  }
  return b;
}

bool design_check(const Moments& b, int w, int t) {
  if (w < 0 || t < 1) fail(ErrorCode::parameter_out_of_range, "design check needs w >= 0 and t >= 1");
  if (w + t > b.horizon())
    fail(ErrorCode::precondition_failed, "moments computed only up to " + std::to_string(b.horizon()));
  for (int k = w + 1; k <= w + t; ++k)
    if (!b.is_zero(k)) return false;
  return true;
}

DegreeSet degree_set(const PointSet& X) {
  const std::size_t n = X.size();
  DegreeSet out;
  const bool table = n <= kExplicitVertexLimit;
  if (X.mode() == PointMode::exact) {
    std::set<Rational, std::greater<>> values;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = a + 1; c < n; ++c) values.insert(X.inner_exact(a, c));
    out.exact.assign(values.begin(), values.end());
    if (table && out.exact.size() < 256) {
      std::map<Rational, std::uint8_t> index;
      for (std::size_t i = 0; i < out.exact.size(); ++i) index[out.exact[i]] = static_cast<std::uint8_t>(i + 1);
      out.classes.assign(n * n, 0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = a + 1; c < n; ++c) out.classes[a * n + c] = out.classes[c * n + a] = index[X.inner_exact(a, c)];
    }
    return out;
  }
  struct Pair {
    double value;
    std::uint32_t a, c;
  };
  std::vector<Pair> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c)
      pairs.push_back({X.inner(a, c), static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(c)});
  std::sort(pairs.begin(), pairs.end(), [](const Pair& l, const Pair& r) {
    return l.value != r.value ? l.value > r.value : std::tie(l.a, l.c) < std::tie(r.a, r.c);
  });
  std::vector<std::size_t> label(pairs.size());
  std::vector<double> sum;
  std::vector<std::size_t> count;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (p == 0 || pairs[p - 1].value - pairs[p].value > kDegreeTolerance) {
      sum.push_back(0);
      count.push_back(0);
    }
    sum.back() += pairs[p].value;
    ++count.back();
    label[p] = sum.size();
  }
  for (std::size_t i = 0; i < sum.size(); ++i) out.real.push_back(sum[i] / static_cast<double>(count[i]));
  if (table && sum.size() < 256) {
    out.classes.assign(n * n, 0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto v = static_cast<std::uint8_t>(label[p]);
      out.classes[pairs[p].a * n + pairs[p].c] = out.classes[pairs[p].c * n + pairs[p].a] = v;
    }
  }
  return out;
}

std::vector<SphericalInterval> spherical_intervals(const Moments& b) {
  std::vector<SphericalInterval> out;
  const int K = b.horizon();
  int k = 1;
  while (k <= K) {
    if (!b.is_zero(k)) {
      ++k;
      continue;
    }
    SphericalInterval iv;
    iv.w = k - 1;
    while (k <= K && b.is_zero(k)) ++k;
    iv.t = k - 1 - iv.w;
    iv.closed = k <= K;
    out.push_back(iv);
  }
  return out;
}

RelationMatrix spherical_relations(const DegreeSet& degrees, std::size_t n) {
  if (degrees.classes.size() != n * n)
    fail(ErrorCode::scheme_too_large, "inner-product classes were not tabulated for this point set");
  RelationMatrix rel(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) rel.set(a, c, degrees.classes[a * n + c]);
  return rel;
}

SphericalReport spherical_analysis(const PointSet& X, int K, const InducedOptions& options) {
  if (K < 1) fail(ErrorCode::parameter_out_of_range, "moment horizon must be at least 1");
  SphericalReport rep;
  rep.mode = X.mode();
  rep.dimension = X.dimension();
  rep.size = X.size();
  rep.moments = moments(X, K);
  rep.degrees = degree_set(X);
  rep.intervals = spherical_intervals(rep.moments);
  const int s = rep.degrees.degree();
  bool sint = false;
  for (const auto& iv : rep.intervals) {
    if (!iv.closed) continue;
    SphericalBound bound;
    bound.interval = iv;
    bound.bound = 2 * s;
    bound.satisfied = iv.t <= 2 * s;
    bound.sint = 2 * s - 1 <= iv.t;
    if (!bound.satisfied)
      fail(ErrorCode::bound_violation, "spherical interval (" + std::to_string(iv.w) + "," + std::to_string(iv.t) +
                                           ") exceeds 2s = " + std::to_string(2 * s));
    sint = sint || bound.sint;
    rep.bounds.push_back(bound);
  }
  if (sint && X.size() >= 2) {
    std::vector<int> values(s + 1);
    for (int i = 0; i <= s; ++i) values[i] = i;
    rep.induced = certify_relation_scheme(spherical_relations(rep.degrees, X.size()), std::move(values), true,
                                          "2s-1 <= t on a closed spherical dual zero interval", options);
  }
  return rep;
}

ScarCheck verify_scar(const PointSet& X, const Polynomial& F) {
  ScarCheck out;
  out.mode = X.mode();
  const int deg = std::max(F.degree(), 0);
  out.f = expand_in_graded_basis(F, gegenbauer_basis(X.dimension(), deg));
  const DegreeSet A = degree_set(X);
  const Moments b = moments(X, deg);
  if (X.mode() == PointMode::exact) {
    for (const auto& alpha : A.exact)
      if (F(alpha) != 0) fail(ErrorCode::not_annihilator, "F(" + to_string(alpha) + ") = " + to_string(F(alpha)));
    out.lhs_exact = F(Rational(1));
    out.rhs_exact = 0;
    for (int k = 0; k <= deg; ++k) out.rhs_exact += out.f[k] * b.exact[k];
    out.residual_exact = out.lhs_exact - out.rhs_exact;
    out.lhs = out.lhs_exact.get_d();
    out.rhs = out.rhs_exact.get_d();
    out.residual = out.residual_exact.get_d();
    out.holds = out.residual_exact == 0;
    return out;
  }
  for (double alpha : A.real) {
    double slope = 0;
    for (int k = 1; k <= F.degree(); ++k) slope += k * F.coefficient(k).get_d() * std::pow(alpha, k - 1);
    const double value = F.evaluate(alpha);
    if (std::abs(value) > kDegreeTolerance * std::max(1.0, std::abs(slope)))
      fail(ErrorCode::not_annihilator, "F(" + std::to_string(alpha) + ") = " + std::to_string(value));
  }
  double norm1 = 0;
  for (const auto& c : out.f) norm1 += std::abs(c.get_d());
  out.lhs = F.evaluate(1.0);
  for (int k = 0; k <= deg; ++k) out.rhs += out.f[k].get_d() * b.real[k];
  out.residual = out.lhs - out.rhs;
  out.tolerance = b.tolerance * std::max(1.0, norm1);
  out.holds = std::abs(out.residual) <= out.tolerance;
  return out;
}

}  // namespace delsarte

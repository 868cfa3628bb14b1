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


#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Dense>

#include "delsarte/errors.hpp"
#include "delsarte/scheme.hpp"

namespace delsarte {

namespace {

/// Trivial eigenspace first, then descending by P(l,1), ties by later columns.
std::vector<int> canonical_row_order(const RealMatrix& P, double tol) {
  const int n = static_cast<int>(P.rows());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin() + 1, order.end(), [&](int a, int b) {
    for (std::size_t j = 1; j < P.cols(); ++j) {
      if (std::abs(P(a, j) - P(b, j)) > tol) return P(a, j) > P(b, j);
    }
    return a < b;
  });
  return order;
}

Integer nv_integer(std::uint64_t nv) { return Integer(std::to_string(nv)); }

/// Fills Q and multiplicities from an exact P; nullopt if P is not a valid
/// first eigenmatrix (non-integral multiplicity or PQ != |X| I).
std::optional<Eigensystem> complete_exact(RatMatrix P, std::uint64_t nv) {
  const std::size_t n = P.rows();
  const Rational X(nv_integer(nv));
  Eigensystem e;
  e.mode = NumberMode::exact;
  e.multiplicities.resize(n);
  RatMatrix Q(n, n);
  for (std::size_t l = 0; l < n; ++l) {
    Rational norm = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (P(0, j) <= 0) return std::nullopt;
      norm += P(l, j) * P(l, j) / P(0, j);
    }
    if (norm == 0) return std::nullopt;
    const Rational m = X / norm;
    if (!is_integer(m) || m <= 0) return std::nullopt;
    e.multiplicities[l] = to_int64(m.get_num());
    for (std::size_t j = 0; j < n; ++j) Q(j, l) = m * P(l, j) / P(0, j);
  }
  const RatMatrix PQ = P * Q;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (PQ(a, b) != (a == b ? X : Rational(0))) return std::nullopt;
  e.P_real = to_real(P);
  e.Q_real = to_real(Q);
  e.P = std::move(P);
  e.Q = std::move(Q);
  return e;
}

struct NumericSplit {
  RealMatrix P;  // rows = eigenspaces, canonical order
  bool ok = false;
};

NumericSplit numeric_split(const IntersectionNumbers& p, std::uint64_t seed) {
  const int d = p.num_classes();
  const int n = d + 1;
  const auto k = p.valencies();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(0.5, 1.5);
  std::vector<double> c(n);
  for (auto& ci : c) ci = coef(rng);
  // (L_i)_{kj} = p_ij^k acts on row vectors r with r L_i = P_li r.
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i <= d; ++i)
    for (int kk = 0; kk <= d; ++kk)
      for (int j = 0; j <= d; ++j) M(kk, j) += c[i] * static_cast<double>(p(i, j, kk));
  // D^{-1/2} M D^{1/2}-similarity makes M symmetric: k_k p_ij^k = k_j p_ik^j.
  Eigen::MatrixXd S(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      S(a, b) = M(a, b) * std::sqrt(static_cast<double>(k[a])) / std::sqrt(static_cast<double>(k[b]));
  S = 0.5 * (S + S.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(S);
  NumericSplit out;
  if (solver.info() != Eigen::Success) return out;
  const auto& vals = solver.eigenvalues();
  const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
  for (int a = 1; a < n; ++a)
    if (vals(a) - vals(a - 1) < 1e-6 * scale) return out;
  RealMatrix P(n, n);
  for (int l = 0; l < n; ++l) {
    const auto u = solver.eigenvectors().col(l);
    std::vector<double> r(n);
    for (int j = 0; j < n; ++j) r[j] = u(j) * std::sqrt(static_cast<double>(k[j]));
    if (std::abs(r[0]) < 1e-12) return out;
    for (int j = 0; j < n; ++j) P(l, j) = r[j] / r[0];
  }
  // Row matching the valencies is the trivial eigenspace.
  int trivial = -1;
  for (int l = 0; l < n && trivial < 0; ++l) {
    bool match = true;
    for (int j = 0; j < n; ++j)
      match = match && std::abs(P(l, j) - static_cast<double>(k[j])) <= 1e-6 * std::max(1.0, double(k[j]));
    if (match) trivial = l;
  }
  if (trivial < 0) return out;
  RealMatrix sorted(n, n);
  std::vector<int> rows(n);
  std::iota(rows.begin(), rows.end(), 0);
  std::swap(rows[0], rows[trivial]);
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j) sorted(l, j) = P(rows[l], j);
  const auto order = canonical_row_order(sorted, 1e-7 * scale);
  out.P = RealMatrix(n, n);
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j) out.P(l, j) = sorted(order[l], j);
  out.ok = true;
  return out;
}

/// Rounds a numeric P to integers and checks the eigen-equations exactly.
std::optional<Eigensystem> try_exact(const RealMatrix& Pn, const IntersectionNumbers& p, std::uint64_t nv) {
  const int n = static_cast<int>(Pn.rows());
  std::vector<Integer> Pi(n * n);
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j) {
      const double v = Pn(l, j);
      const double r = std::round(v);
      if (std::abs(v - r) > 1e-6 * std::max(1.0, std::abs(v))) return std::nullopt;
      Pi[l * n + j] = Integer(static_cast<long>(r));
    }
  // sum_k p_ij^k P_lk = P_li P_lj
  Integer lhs;
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        lhs = 0;
        for (int k = 0; k < n; ++k) lhs += Integer(static_cast<long>(p(i, j, k))) * Pi[l * n + k];
        if (lhs != Pi[l * n + i] * Pi[l * n + j]) return std::nullopt;
      }
  RatMatrix P(n, n);
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j) P(l, j) = Pi[l * n + j];
  return complete_exact(std::move(P), nv);
}

Eigensystem approx_from(const RealMatrix& P, const IntersectionNumbers& p, std::uint64_t nv) {
  const std::size_t n = P.rows();
  const auto k = p.valencies();
  Eigensystem e;
  e.mode = NumberMode::approx;
  e.tolerance = kEigenTolerance;
  e.P_real = P;
  e.Q_real = RealMatrix(n, n);
  e.multiplicities.resize(n);
  const double X = static_cast<double>(nv);
  for (std::size_t l = 0; l < n; ++l) {
    double norm = 0;
    for (std::size_t j = 0; j < n; ++j) norm += P(l, j) * P(l, j) / static_cast<double>(k[j]);
    const double m = X / norm;
    const double mr = std::round(m);
    if (std::abs(m - mr) > 1e-6 * std::max(1.0, m) || mr < 1)
      fail(ErrorCode::eigensystem_not_separated,
           "eigenspace " + std::to_string(l) + " has non-integral multiplicity " + std::to_string(m));
    e.multiplicities[l] = static_cast<std::int64_t>(mr);
    for (std::size_t j = 0; j < n; ++j) e.Q_real(j, l) = mr * P(l, j) / static_cast<double>(k[j]);
  }
  const RealMatrix PQ = e.P_real * e.Q_real;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const double want = a == b ? X : 0.0;
      if (std::abs(PQ(a, b) - want) > kEigenTolerance * X * 1e3)
        fail(ErrorCode::eigensystem_not_separated, "PQ deviates from |X| I beyond tolerance");
    }
  return e;
}

}  // namespace

Eigensystem eigensystem(const IntersectionNumbers& p, std::uint64_t num_vertices) {
  const int d = p.num_classes();
  if (d < 1) fail(ErrorCode::invalid_input, "scheme needs at least one class");
  constexpr int kAttempts = 6;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const auto split = numeric_split(p, 0x9e3779b97f4a7c15ULL + attempt);
    if (!split.ok) continue;
    if (auto exact = try_exact(split.P, p, num_vertices)) return *exact;
    return approx_from(split.P, p, num_vertices);
  }
  fail(ErrorCode::eigensystem_not_separated, "common eigenspaces could not be separated");
}

Eigensystem eigensystem_from_exact(RatMatrix P, std::uint64_t num_vertices) {
  auto e = complete_exact(std::move(P), num_vertices);
  if (!e) fail(ErrorCode::invalid_input, "matrix is not a first eigenmatrix");
  return *e;
}

KreinNumbers krein_numbers(const Eigensystem& e, std::uint64_t num_vertices) {
  const int d = static_cast<int>(e.P_real.rows()) - 1;
  const int n = d + 1;
  KreinNumbers q(d, e.mode);
  auto report_negative = [&](int i, int j, int k, const std::string& value) {
    fail(ErrorCode::negative_krein, "q[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                                        std::to_string(k) + "] = " + value);
  };
  if (e.mode == NumberMode::exact) {
    // q_ij^k = (1/|X|) sum_l Q_li Q_lj P_kl. Scale to integers when possible.
    Integer den = 1;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.Q(r, c).get_den_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.P(r, c).get_den_mpz_t());
      }
    std::vector<Integer> Pi(n * n), Qi(n * n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        Rational pv = e.P(r, c) * den, qv = e.Q(r, c) * den;
        Pi[r * n + c] = pv.get_num();
        Qi[r * n + c] = qv.get_num();
      }
    const Integer scale = den * den * den * nv_integer(num_vertices);
    Integer acc, term;
    for (int i = 0; i <= d; ++i)
      for (int j = i; j <= d; ++j)
        for (int k = 0; k <= d; ++k) {
          acc = 0;
          for (int l = 0; l <= d; ++l) {
            term = Qi[l * n + i] * Qi[l * n + j];
            acc += term * Pi[k * n + l];
          }
          Rational v(acc, scale);
          v.canonicalize();
          if (v < 0) report_negative(i, j, k, to_string(v));
          for (auto idx : {q.index(i, j, k), q.index(j, i, k)}) {
            q.exact_[idx] = v;
            q.real_[idx] = v.get_d();
          }
        }
    return q;
  }
  double biggest = 0;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      for (int k = 0; k <= d; ++k) {
        double acc = 0;
        for (int l = 0; l <= d; ++l) acc += e.Q_real(l, i) * e.Q_real(l, j) * e.P_real(k, l);
        acc /= static_cast<double>(num_vertices);
        q.real_[q.index(i, j, k)] = acc;
        biggest = std::max(biggest, std::abs(acc));
      }
  q.tolerance_ = kEigenTolerance * std::max(1.0, biggest);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      for (int k = 0; k <= d; ++k) {
        double& v = q.real_[q.index(i, j, k)];
        if (std::abs(v) <= q.tolerance_) v = 0.0;
        else if (v < 0) report_negative(i, j, k, std::to_string(v));
      }
  return q;
}

}  // namespace delsarte

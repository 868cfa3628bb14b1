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


#include "delsarte/induced.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>

#include "delsarte/concurrency.hpp"
#include "delsarte/errors.hpp"
#include "delsarte/matrix.hpp"

namespace delsarte {

namespace {

__extension__ using i128 = __int128;

Rational x_of(std::uint64_t nv) { return Rational(Integer(std::to_string(nv))); }

/// Q scaled by the lcm of its denominators, as 64-bit integers.
std::vector<std::int64_t> scaled_q(const RatMatrix& Q) {
  Integer den = 1;
  for (const auto& v : Q.data()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<std::int64_t> out;
  out.reserve(Q.data().size());
  for (const auto& v : Q.data()) {
    Rational s = v * den;
    if (!fits_int64(s.get_num())) fail(ErrorCode::subset_too_large, "idempotent coefficients exceed 64 bits");
    out.push_back(to_int64(s.get_num()));
  }
  return out;
}

void check_magnitude(const std::vector<std::int64_t>& q, std::size_t terms, std::size_t multiplicity) {
  double biggest = 1;
  for (auto v : q) biggest = std::max(biggest, std::abs(static_cast<double>(v)));
  const double bits = 2 * std::log2(biggest) + std::log2(double(terms) + 1) + std::log2(double(multiplicity) + 1);
  if (bits > 124) fail(ErrorCode::subset_too_large, "product sums would overflow 128 bits");
}

/// Bitset of the C-members in each relation class, for a list of base vertices.
struct ClassBitsets {
  std::size_t words = 0;
  int classes = 0;
  std::vector<std::uint64_t> bits;  // base x class x words
  const std::uint64_t* at(std::size_t base, int cls) const { return bits.data() + (base * classes + cls) * words; }
  std::uint64_t* at(std::size_t base, int cls) { return bits.data() + (base * classes + cls) * words; }
};

void class_counts(const ClassBitsets& b, std::size_t x, std::size_t y, std::vector<std::int64_t>& n) {
  const int m = b.classes;
  n.assign(static_cast<std::size_t>(m) * m, 0);
  for (int r = 0; r < m; ++r) {
    const auto* px = b.at(x, r);
    for (int t = 0; t < m; ++t) {
      const auto* py = b.at(y, t);
      std::int64_t c = 0;
      for (std::size_t w = 0; w < b.words; ++w) c += std::popcount(px[w] & py[w]);
      n[r * m + t] = c;
    }
  }
}

/// sum_{r,t} Qk[r] Ql[t] n[r][t] == 0 for n and for its transpose.
bool form_vanishes(const std::vector<std::int64_t>& qk, const std::vector<std::int64_t>& ql,
                   const std::vector<std::int64_t>& n, int m, bool transpose) {
  i128 total = 0;
  for (int r = 0; r < m; ++r) {
    if (qk[r] == 0) continue;
    i128 inner = 0;
    for (int t = 0; t < m; ++t) inner += static_cast<i128>(ql[t]) * (transpose ? n[t * m + r] : n[r * m + t]);
    total += static_cast<i128>(qk[r]) * inner;
  }
  return total == 0;
}

}  // namespace

Rational RestrictedIdempotents::entry(int i, std::size_t x, std::size_t y) const {
  return Q_(relation(x, y), i) / x_of(nv_);
}

RatMatrix RestrictedIdempotents::matrix(int i) const {
  const std::size_t n = size();
  RatMatrix m(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) m(x, y) = entry(i, x, y);
  return m;
}

bool RestrictedIdempotents::sum_is_identity() const {
  const Rational X = x_of(nv_);
  for (int r : realized_) {
    Rational s = 0;
    for (int i = 0; i <= d_; ++i) s += Q_(r, i);
    if (s != (r == 0 ? X : Rational(0))) return false;
  }
  return true;
}

RestrictedIdempotents restricted_idempotents(const AssociationScheme& scheme, std::span<const Vertex> subset) {
  validate_subset(scheme, subset);
  if (subset.size() > kRestrictedLimit)
    fail(ErrorCode::subset_too_large, "restricted idempotents need |C| <= " + std::to_string(kRestrictedLimit));
  RestrictedIdempotents F;
  F.d_ = scheme.num_classes();
  F.nv_ = scheme.num_vertices();
  F.Q_ = scheme.Q();
  F.q_ordered_ = scheme.is_q_polynomial_as_ordered();
  F.subset_.assign(subset.begin(), subset.end());
  const std::size_t n = subset.size();
  std::vector<std::uint64_t> keys(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = scheme.key(subset[i]);
  F.table_.assign(n * n, 0);
  parallel_chunks(n, std::min<std::size_t>(n, 64), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t x = begin; x < end; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x != y) F.table_[x * n + y] = static_cast<std::uint8_t>(scheme.relation_of_keys(keys[x], keys[y]));
  });
  F.pair_counts_.assign(F.d_ + 1, 0);
  for (auto r : F.table_) ++F.pair_counts_[r];
  for (int r = 0; r <= F.d_; ++r)
    if (F.pair_counts_[r] > 0) F.realized_.push_back(r);
  const Rational X2 = x_of(F.nv_) * x_of(F.nv_);
  F.gram_ = RatMatrix(F.d_ + 1, F.d_ + 1);
  for (int i = 0; i <= F.d_; ++i)
    for (int j = i; j <= F.d_; ++j) {
      Rational s = 0;
      for (int r : F.realized_) s += Rational(static_cast<long>(F.pair_counts_[r])) * F.Q_(r, i) * F.Q_(r, j);
      F.gram_(i, j) = F.gram_(j, i) = s / X2;
    }
  return F;
}

RatMatrix gram_from_krein(const AssociationScheme& scheme, const SubsetAnalysis& an) {
  const int d = scheme.num_classes();
  const Rational X = x_of(scheme.num_vertices());
  // trace(F_i F_j) = sum over C x C of (E_i o E_j)(x,y) = (1/|X|) sum_k q_ij^k chi^T E_k chi,
  // and chi^T E_k chi = |C| b_k / |X|. Hence the constant 1/|X|^2 in front of |C| sum q b.
  // With Krein numbers scaled by |X| it would read 1/|X|; the J(5,2) eigenbasis check
  // in the tests separates the two.
  const Rational c = Rational(static_cast<long>(an.subset_size)) / (X * X);
  RatMatrix G(d + 1, d + 1);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) {
      Rational s = 0;
      for (int k = 0; k <= d; ++k)
        if (an.dual[k] != 0) s += scheme.krein().exact(i, j, k) * an.dual[k];
      G(i, j) = c * s;
    }
  return G;
}

ProductReport products_vanish(const RestrictedIdempotents& F, const std::vector<std::pair<int, int>>& pairs,
                              const ProductOptions& options) {
  const std::size_t n = F.size();
  const auto& R = F.realized_relations();
  const int m = static_cast<int>(R.size());
  const int d = F.num_classes();
  const auto qs = scaled_q(F.Q());
  check_magnitude(qs, static_cast<std::size_t>(m) * m, n);
  // Column vectors of the scaled Q restricted to realised relations.
  std::vector<std::vector<std::int64_t>> col(d + 1, std::vector<std::int64_t>(m));
  for (int i = 0; i <= d; ++i)
    for (int a = 0; a < m; ++a) col[i][a] = qs[static_cast<std::size_t>(R[a]) * (d + 1) + i];
  std::vector<int> cls(d + 1, -1);
  for (int a = 0; a < m; ++a) cls[R[a]] = a;

  ClassBitsets bits;
  bits.words = (n + 63) / 64;
  bits.classes = m;
  bits.bits.assign(n * m * bits.words, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) bits.at(x, cls[F.relation(x, y)])[y >> 6] |= std::uint64_t{1} << (y & 63);

  ProductReport rep;
  rep.full = options.full.value_or(n <= kFullProductLimit);
  rep.zero.assign(pairs.size(), true);

  auto visit = [&](std::size_t x, std::size_t y, std::vector<std::int64_t>& buf, std::vector<bool>& zero) {
    class_counts(bits, x, y, buf);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (!zero[p]) continue;
      const auto [k, l] = pairs[p];
      if (!form_vanishes(col[k], col[l], buf, m, false) || !form_vanishes(col[k], col[l], buf, m, true))
        zero[p] = false;
    }
  };

  if (rep.full) {
    const std::size_t chunks = std::min<std::size_t>(n, 64);
    std::vector<std::vector<bool>> local(chunks, std::vector<bool>(pairs.size(), true));
    parallel_chunks(n, chunks, [&](std::size_t c, std::size_t begin, std::size_t end) {
      std::vector<std::int64_t> buf;
      for (std::size_t x = begin; x < end; ++x)
        for (std::size_t y = x; y < n; ++y) {
          visit(x, y, buf, local[c]);
          if (std::none_of(local[c].begin(), local[c].end(), [](bool z) { return z; })) return;
        }
    });
    for (const auto& l : local)
      for (std::size_t p = 0; p < pairs.size(); ++p) rep.zero[p] = rep.zero[p] && l[p];
    rep.pairs_checked = n * (n + 1) / 2;
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::uint64_t count = std::max<std::uint64_t>(1, (options.sampled_triples + n - 1) / n);
    std::vector<std::int64_t> buf;
    for (std::uint64_t s = 0; s < count; ++s) visit(pick(rng), pick(rng), buf, rep.zero);
    rep.pairs_checked = count;
  }
  rep.triples_checked = rep.pairs_checked * n;
  return rep;
}

QMainthCheck check_qmainth_hypothesis(const RestrictedIdempotents& F, const SubsetAnalysis& an, int w_star,
                                      const ProductOptions& options) {
  if (!F.q_ordered()) fail(ErrorCode::not_polynomial_scheme, "scheme is not Q-polynomial in its presented order");
  const int d = F.num_classes();
  const int s = an.degree;
  if (w_star < 0 || w_star > d - s)
    fail(ErrorCode::precondition_failed, "w* = " + std::to_string(w_star) + " outside 0.." + std::to_string(d - s));
  if (an.dual[w_star] <= 0) fail(ErrorCode::precondition_failed, "b_" + std::to_string(w_star) + " = 0");
  QMainthCheck out;
  out.w_star = w_star;
  out.s = s;
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k <= w_star + s; ++k)
    for (int l = k + w_star + 1; l <= w_star + s; ++l) pairs.emplace_back(k, l);
  out.products = products_vanish(F, pairs, options);
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (!out.products.zero[p]) out.failing.push_back(pairs[p]);
  out.holds = out.failing.empty();
  return out;
}

std::optional<QMainthCheck> find_qmainth_witness(const RestrictedIdempotents& F, const SubsetAnalysis& an,
                                                 const ProductOptions& options) {
  for (int w = 0; w <= F.num_classes() - an.degree; ++w) {
    if (an.dual[w] <= 0) continue;
    auto check = check_qmainth_hypothesis(F, an, w, options);
    if (check.holds) return check;
  }
  return std::nullopt;
}

bool step2_bases_independent(const RestrictedIdempotents& F, int w_star, int s) {
  const auto& R = F.realized_relations();
  for (int j = 0; j <= s + 1; ++j) {
    std::vector<int> members;
    for (int i = 0; i < j; ++i) members.push_back(i);
    for (int i = w_star + j; i <= w_star + s; ++i) members.push_back(i);
    RatMatrix M(members.size(), R.size());
    for (std::size_t a = 0; a < members.size(); ++a) {
      if (members[a] > F.num_classes()) return false;
      for (std::size_t r = 0; r < R.size(); ++r) M(a, r) = F.Q()(R[r], members[a]);
    }
    if (rank(M) != members.size()) return false;
  }
  return true;
}

InducedScheme certify_relation_scheme(RelationMatrix relations, std::vector<int> relation_values, bool licensed,
                                      const std::string& licence, const InducedOptions& options) {
  InducedScheme out;
  out.relation_values = std::move(relation_values);
  out.classes = static_cast<int>(out.relation_values.size()) - 1;
  out.licensed = licensed;
  out.licence = licence;
  const std::size_t n = relations.size();
  if (n < 2) fail(ErrorCode::precondition_failed, "induced structure needs at least two points");
  VerifyOptions vo;
  vo.full = options.full_verify.value_or(n <= kFullProductLimit);
  vo.sampled_triples = options.sampled_triples;
  vo.seed = options.seed;
  try {
    out.scheme = verify_scheme(std::move(relations), vo);
  } catch (const Error& e) {
    if (licensed) fail(ErrorCode::theorem_violation, "licensed induced structure failed verification: " + std::string(e.what()));
    fail(ErrorCode::not_a_scheme, e.what());
  }
  out.scheme_ok = true;
  out.verification = out.scheme->verification();
  out.number_mode = out.scheme->number_mode();
  out.q_ordering = out.scheme->orderings().q;
  if (licensed && !out.q_ordering)
    fail(ErrorCode::theorem_violation, "licensed induced scheme has no Q-polynomial ordering");
  return out;
}

InducedScheme induce_scheme(const AssociationScheme& scheme, std::span<const Vertex> subset, bool licensed,
                            const std::string& licence, const InducedOptions& options) {
  validate_subset(scheme, subset);
  const std::size_t n = subset.size();
  if (n > kExplicitVertexLimit) fail(ErrorCode::subset_too_large, "induced scheme limited to 5000 points");
  std::vector<std::uint64_t> keys(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = scheme.key(subset[i]);
  std::vector<std::uint8_t> raw(n * n, 0);
  parallel_chunks(n, std::min<std::size_t>(n, 64), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t x = begin; x < end; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x != y) raw[x * n + y] = static_cast<std::uint8_t>(scheme.relation_of_keys(keys[x], keys[y]));
  });
  std::vector<int> index(scheme.num_classes() + 1, -1);
  std::vector<int> values;
  for (auto r : raw) index[r] = 0;
  for (int r = 0; r <= scheme.num_classes(); ++r)
    if (index[r] == 0) {
      index[r] = static_cast<int>(values.size());
      values.push_back(r);
    }
  RelationMatrix rel(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rel.set(x, y, static_cast<std::uint8_t>(index[raw[x * n + y]]));
  return certify_relation_scheme(std::move(rel), std::move(values), licensed, licence, options);
}

DualIntervalBattery::DualIntervalBattery(const AssociationScheme& scheme, std::span<const Vertex> subset, const SubsetAnalysis& an,
                     const RestrictedIdempotents& F, const OuterDistribution& B)
    : d_(scheme.num_classes()) {
  const int m = d_ + 1;
  const RatMatrix& Q = scheme.Q();
  b_zero_.resize(m);
  for (int k = 0; k < m; ++k) b_zero_[k] = an.dual[k] == 0;

  echi_zero_.assign(m, true);
  for (int k = 0; k < m; ++k)
    for (std::size_t r = 0; r < B.num_rows() && echi_zero_[k]; ++r) {
      Rational s = 0;
      const auto row = B.row(r);
      for (int i = 0; i < m; ++i)
        if (row[i]) s += Q(i, k) * static_cast<long>(row[i]);
      if (s != 0) echi_zero_[k] = false;
    }

  // E_i Delta_C E_j over all of X: count z in C by (rel(x,z), rel(z,y)).
  const std::size_t nv = scheme.num_vertices();
  if (nv > kRestrictedLimit) fail(ErrorCode::scheme_too_large, "battery evaluates E_i Delta_C E_j over X; needs |X| <= 4096");
  const auto qs = scaled_q(Q);
  check_magnitude(qs, static_cast<std::size_t>(m) * m, subset.size());
  std::vector<std::vector<std::int64_t>> col(m, std::vector<std::int64_t>(m));
  for (int i = 0; i < m; ++i)
    for (int r = 0; r < m; ++r) col[i][r] = qs[static_cast<std::size_t>(r) * m + i];
  ClassBitsets bits;
  bits.words = (subset.size() + 63) / 64;
  bits.classes = m;
  bits.bits.assign(nv * m * bits.words, 0);
  std::vector<std::uint64_t> keys(subset.size());
  for (std::size_t c = 0; c < subset.size(); ++c) keys[c] = scheme.key(subset[c]);
  for (std::size_t x = 0; x < nv; ++x) {
    const auto kx = scheme.key(x);
    for (std::size_t c = 0; c < subset.size(); ++c)
      bits.at(x, scheme.relation_of_keys(kx, keys[c]))[c >> 6] |= std::uint64_t{1} << (c & 63);
  }
  std::set<std::vector<std::int64_t>> patterns;
  std::vector<std::int64_t> buf;
  for (std::size_t x = 0; x < nv; ++x)
    for (std::size_t y = x; y < nv; ++y) {
      class_counts(bits, x, y, buf);
      patterns.insert(buf);
    }
  edelta_zero_.assign(m, std::vector<bool>(m, true));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (const auto& p : patterns)
        if (!form_vanishes(col[i], col[j], p, m, false) || !form_vanishes(col[i], col[j], p, m, true)) {
          edelta_zero_[i][j] = false;
          break;
        }

  gram_zero_.assign(m, std::vector<bool>(m, true));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) gram_zero_[i][j] = F.gram()(i, j) == 0;

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) pairs.emplace_back(i, j);
  ProductOptions po;
  po.full = true;
  const auto rep = products_vanish(F, pairs, po);
  product_zero_.assign(m, std::vector<bool>(m, true));
  for (std::size_t p = 0; p < pairs.size(); ++p)
    product_zero_[pairs[p].first][pairs[p].second] = product_zero_[pairs[p].second][pairs[p].first] = rep.zero[p];
}

DualIntervalStatements DualIntervalBattery::part1(int w, int t) const {
  DualIntervalStatements s;
  s.a = s.c = true;
  for (int k = w + 1; k <= w + t; ++k) {
    s.a = s.a && b_zero_[k];
    s.c = s.c && echi_zero_[k];
  }
  s.b = s.d = s.e = true;
  for (int i = 0; i <= d_; ++i)
    for (int j = 0; j <= d_; ++j)
      if (std::abs(i - j) >= w + 1 && i + j <= w + t) {
        s.b = s.b && edelta_zero_[i][j];
        s.d = s.d && gram_zero_[i][j];
        s.e = s.e && product_zero_[i][j];
      }
  return s;
}

DualIntervalStatements DualIntervalBattery::part2(int w) const {
  DualIntervalStatements s;
  s.a = !b_zero_[w];
  s.c = !echi_zero_[w];
  s.b = s.d = s.e = true;
  for (int i = 0; i <= d_; ++i)
    for (int j = 0; j <= d_; ++j)
      if (std::abs(i - j) == w) {
        s.b = s.b && !edelta_zero_[i][j];
        s.d = s.d && !gram_zero_[i][j];
        s.e = s.e && !product_zero_[i][j];
      }
  return s;
}

}  // namespace delsarte

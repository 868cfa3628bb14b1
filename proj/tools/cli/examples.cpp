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


#include "examples.hpp"

#include <algorithm>
#include <sstream>

#include "delsarte/codes.hpp"
#include "delsarte/errors.hpp"
#include "delsarte/named_schemes.hpp"
#include "delsarte/regularity.hpp"

namespace delsarte::cli {

namespace {

struct Expected {
  std::string description;
  BinaryLinearCode code;
  std::vector<long> a;             // empty: not checked
  std::vector<long> b_normalized;  // b / b_0; empty: not checked
  std::vector<std::pair<int, int>> intervals;
  int degree = 0;  // s* for p examples, s for q examples
  std::vector<int> degree_set;  // empty: not checked
};

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

void expect(bool ok, const std::string& id, const std::string& what) {
  if (!ok) fail(ErrorCode::theorem_violation, id + ": " + what);
}

std::vector<Rational> as_rationals(const std::vector<long>& v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<int> evens(int from, int to) {
  std::vector<int> out;
  for (int k = from; k <= to; k += 2) out.push_back(k);
  return out;
}

void check_range(int value, int lo, int hi, const char* name) {
  if (value < lo || value > hi)
    fail(ErrorCode::parameter_out_of_range,
         std::string(name) + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
}

const std::vector<long> kGolay23A = {1, 0, 0, 0, 0, 0, 0, 253, 506, 0, 0, 1288, 1288, 0, 0, 506, 253, 0, 0, 0, 0, 0, 0, 1};
const std::vector<long> kGolay23B = {1, 0, 0, 0, 0, 0, 0, 0, 506, 0, 0, 0, 1288, 0, 0, 0, 253, 0, 0, 0, 0, 0, 0, 0};
const std::vector<long> kGolay23x2A = {1, 1, 0, 0, 0, 0, 0, 253, 759, 506, 0, 1288, 2576,
                                       1288, 0, 506, 759, 253, 0, 0, 0, 0, 0, 1, 1};
const std::vector<long> kGolay23x2B = {1, 0, 0, 0, 0, 0, 0, 0, 506, 0, 0, 0, 1288,
                                       0, 0, 0, 253, 0, 0, 0, 0, 0, 0, 0, 0};
const std::vector<long> kGolay24 = {1, 0, 0, 0, 0, 0, 0, 0, 759, 0, 0, 0, 2576, 0, 0, 0, 759, 0, 0, 0, 0, 0, 0, 0, 1};

Expected primal(int index, const ExampleOptions& o) {
  switch (index) {
    case 1: {
      check_range(o.n, 2, 10, "n");
      Expected e{"{0,1} x {0^(2n-1), 1^(2n-1)} in H(2n,2), n = " + std::to_string(o.n), two_by_two_code(o.n)};
      e.a.assign(2 * o.n + 1, 0);
      e.a[0] = e.a[1] = e.a[2 * o.n - 1] = e.a[2 * o.n] = 1;
      e.intervals = {{1, 2 * o.n - 3}};
      e.degree = o.n - 1;
      e.degree_set = evens(2, 2 * o.n - 2);
      return e;
    }
    case 2: {
      check_range(o.m, 2, 4, "m");
      const int n = (1 << o.m) - 1;
      Expected e{"Hamming code [" + std::to_string(n) + "," + std::to_string(n - o.m) + ",3] in H(" +
                     std::to_string(n) + ",2)",
                 hamming_code(o.m)};
      e.intervals = {{n - 3, 2}};
      e.degree = 1;
      return e;
    }
    case 3: {
      check_range(o.m, 2, 4, "m");
      const int n = 1 << o.m;
      Expected e{"extended Hamming code [" + std::to_string(n) + "," + std::to_string(n - o.m - 1) + ",4] in H(" +
                     std::to_string(n) + ",2)",
                 extended_hamming_code(o.m)};
      e.intervals = {{n - 4, 3}};
      e.degree = 2;
      return e;
    }
    case 4: {
      Expected e{"Golay code [23,12,7] in H(23,2)", golay23(), kGolay23A, kGolay23B, {{16, 6}}, 3, {8, 12, 16}};
      return e;
    }
    case 5: {
      Expected e{"Golay code [23,12,7] x {0,1} in H(24,2)", append_free_bit(golay23()), kGolay23x2A, kGolay23x2B,
                 {{1, 5}, {17, 5}}, 3, {8, 12, 16}};
      return e;
    }
    case 6: {
      Expected e{"Golay code [24,12,8] in H(24,2)", golay24(), kGolay24, kGolay24, {{16, 7}}, 4, {8, 12, 16, 24}};
      return e;
    }
  }
  fail(ErrorCode::invalid_input, "unknown example");
}

Json distributions(const SubsetAnalysis& an) {
  Json out;
  out["a"] = rationals(an.inner);
  out["b"] = rationals(an.dual);
  std::vector<Rational> normalized;
  for (const auto& x : an.dual) normalized.push_back(x / an.dual[0]);
  out["b_factor"] = rational(an.dual[0]);
  out["b_normalized"] = rationals(normalized);
  return out;
}

bool has_interval(const std::vector<ZeroInterval>& v, int w, int t) {
  return std::any_of(v.begin(), v.end(), [&](const ZeroInterval& z) { return z.w == w && z.t == t; });
}

std::string relation_label(int t, int s) {
  if (t == 2 * s) return "t = 2s";
  if (t == 2 * s - 1) return "t = 2s-1";
  return "t = " + std::to_string(t) + ", s = " + std::to_string(s);
}

Json run_primal(const std::string& id, const Expected& e) {
  const auto scheme = build_hamming(e.code.length(), 2);
  const auto words = e.code.codewords();
  const auto an = analyze_subset(scheme, words);
  enforce_bounds(an.bounds);
  Json out = Json{{"id", id}, {"description", e.description}, {"scheme", scheme.descriptor()}, {"size", words.size()}};
  out.update(distributions(an));
  if (!e.a.empty()) expect(an.inner == as_rationals(e.a), id, "inner distribution differs from the expected vector");
  if (!e.b_normalized.empty()) {
    std::vector<Rational> expected = as_rationals(e.b_normalized);
    for (auto& x : expected) x *= an.dual[0];
    expect(an.dual == expected, id, "dual distribution differs from the expected vector");
  }
  out["zero_intervals"] = intervals(an.zero_intervals);
  out["dual_degree_set"] = an.dual_degree_set;
  out["s_star"] = an.dual_degree;
  expect(an.dual_degree == e.degree, id, "s* = " + std::to_string(an.dual_degree));
  if (!e.degree_set.empty())
    expect(an.dual_degree_set == e.degree_set, id, "dual degree set {" + join(an.dual_degree_set) + "}");

  const auto B = outer_distribution(scheme, e.code);
  const auto verdict = is_completely_regular(B);
  const auto predictions = check_int_condition(an, B);
  Json checked = Json::array();
  for (const auto& [w, t] : e.intervals) {
    expect(has_interval(an.zero_intervals, w, t), id, "missing zero interval (" + std::to_string(w) + "," +
                                                          std::to_string(t) + ")");
    const bool condition = 2 * an.dual_degree - 1 <= t;
    expect(condition, id, "2s*-1 <= t fails on (" + std::to_string(w) + "," + std::to_string(t) + ")");
    checked.push_back(Json{{"w", w}, {"t", t}, {"s_star", an.dual_degree}, {"relation", relation_label(t, an.dual_degree)},
                           {"implies_completely_regular", condition}});
  }
  expect(verdict.completely_regular, id, "code is not completely regular");
  expect(B.rank() == static_cast<std::size_t>(an.dual_degree + 1), id, "rank(B) != s*+1");
  out["checked"] = checked;
  out["completely_regular"] = verdict.completely_regular;
  out["covering_radius"] = verdict.covering_radius;
  out["rank_B"] = B.rank();
  Json preds = Json::array();
  for (const auto& p : predictions)
    preds.push_back(Json{{"interval", interval(p.interval)}, {"predicted", p.predicted}, {"confirmed", p.confirmed}});
  out["interval_predictions"] = preds;
  return out;
}

Json run_dual(const std::string& id, const Expected& primal_e, const ExampleOptions& o) {
  const BinaryLinearCode dual = primal_e.code.dual();
  const auto scheme = build_hamming(dual.length(), 2);
  const auto words = dual.codewords();
  const auto an = analyze_subset(scheme, words);
  enforce_bounds(an.bounds);
  Json out = Json{{"id", id},
                  {"description", "dual of the " + primal_e.description},
                  {"scheme", scheme.descriptor()},
                  {"size", words.size()}};
  out.update(distributions(an));

  // The inner distribution of C* is b(C)/|C|, its dual is (|X|/|C|) a(C).
  const auto primal_words = primal_e.code.codewords();
  const auto pan = analyze_subset(scheme, primal_words);
  const Rational c(static_cast<long>(primal_words.size()));
  const Rational X(Integer(std::to_string(scheme.num_vertices())));
  for (int i = 0; i <= scheme.num_classes(); ++i) {
    expect(an.inner[i] == pan.dual[i] / c, id, "a(C*) != b(C)/|C|");
    expect(an.dual[i] == pan.inner[i] * X / c, id, "b(C*) != (|X|/|C|) a(C)");
  }

  out["dual_zero_intervals"] = intervals(an.dual_zero_intervals);
  out["degree_set"] = an.degree_set;
  out["s"] = an.degree;
  expect(an.degree == primal_e.degree, id, "s = " + std::to_string(an.degree));
  if (!primal_e.degree_set.empty())
    expect(an.degree_set == primal_e.degree_set, id, "degree set {" + join(an.degree_set) + "}");
  Json checked = Json::array();
  for (const auto& [w, t] : primal_e.intervals) {
    expect(has_interval(an.dual_zero_intervals, w, t), id, "missing dual zero interval (" + std::to_string(w) + "," +
                                                               std::to_string(t) + ")");
    const bool condition = 2 * an.degree - 1 <= t;
    expect(condition, id, "2s-1 <= t* fails");
    checked.push_back(Json{{"w_star", w}, {"t_star", t}, {"s", an.degree}, {"relation", relation_label(t, an.degree)},
                           {"implies_q_polynomial", condition}});
  }
  out["checked"] = checked;

  const auto F = restricted_idempotents(scheme, words);
  ProductOptions po;
  po.sampled_triples = o.sampled_triples;
  if (o.full_verify) po.full = o.full_verify;
  const auto witness = find_qmainth_witness(F, an, po);
  expect(witness.has_value(), id, "no w* satisfies the product hypothesis");
  out["hypothesis"] = Json{{"w_star", witness->w_star}, {"holds", witness->holds},
                           {"full", witness->products.full}, {"pairs_checked", witness->products.pairs_checked}};
  InducedOptions io;
  io.full_verify = o.full_verify;
  io.sampled_triples = o.sampled_triples;
  const auto ind = induce_scheme(scheme, words, true, "2s-1 <= t* on a dual zero interval", io);
  expect(ind.scheme_ok && ind.q_ordering && ind.classes == an.degree, id, "induced scheme is not an s-class Q-polynomial scheme");
  out["induced"] = induced(ind);
  return out;
}

}  // namespace

std::vector<std::string> example_ids(const std::string& which) {
  std::vector<std::string> p, q;
  for (int i = 1; i <= 6; ++i) {
    p.push_back("p" + std::to_string(i));
    q.push_back("q" + std::to_string(i));
  }
  if (which == "all") {
    p.insert(p.end(), q.begin(), q.end());
    return p;
  }
  if (which == "p") return p;
  if (which == "q") return q;
  if (which == "golay23") return {"p4"};
  if (which == "golay23x2") return {"p5"};
  if (which == "golay24") return {"p6"};
  if (which.size() == 2 && (which[0] == 'p' || which[0] == 'q') && which[1] >= '1' && which[1] <= '6') return {which};
  fail(ErrorCode::invalid_input, "unknown example '" + which + "'");
}

Json reproduce_example(const std::string& id, const ExampleOptions& options) {
  const int index = id[1] - '0';
  const Expected e = primal(index, options);
  return id[0] == 'p' ? run_primal(id, e) : run_dual(id, e, options);
}

}  // namespace delsarte::cli

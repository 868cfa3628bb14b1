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


#include "app.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "delsarte/concurrency.hpp"
#include "delsarte/errors.hpp"
#include "delsarte/io.hpp"
#include "delsarte/polynomials.hpp"
#include "delsarte/regularity.hpp"
#include "delsarte/spherical.hpp"
#include "examples.hpp"
#include "inputs.hpp"
#include "report.hpp"

namespace delsarte::cli {

namespace {

struct Common {
  std::string scheme;
  std::string code;
  std::string report;
};

Json scheme_info(const AssociationScheme& s) {
  Json out = header("scheme-info");
  out["scheme"] = scheme_summary(s);
  out["valencies"] = s.valencies();
  out["multiplicities"] = s.multiplicities();
  if (s.is_exact()) {
    out["P"] = matrix(s.P());
    out["Q"] = matrix(s.Q());
  } else {
    out["P"] = matrix(s.eigensystem().P_real);
    out["Q"] = matrix(s.eigensystem().Q_real);
    out["eigen_tolerance"] = s.eigensystem().tolerance;
  }
  const auto& o = s.orderings();
  out["p_polynomial_orderings"] = o.p ? Json(*o.p) : Json(nullptr);
  out["q_polynomial_orderings"] = o.q ? Json(*o.q) : Json(nullptr);
  out["p_polynomial_as_ordered"] = s.is_p_polynomial_as_ordered();
  out["q_polynomial_as_ordered"] = s.is_q_polynomial_as_ordered();
  const int d = s.num_classes();
  if (d <= 12) {
    Json p = Json::array(), q = Json::array();
    for (int i = 0; i <= d; ++i) {
      Json pi = Json::array(), qi = Json::array();
      for (int j = 0; j <= d; ++j) {
        Json pij = Json::array(), qij = Json::array();
        for (int k = 0; k <= d; ++k) {
          pij.push_back(s.p(i, j, k));
          if (s.is_exact())
            qij.push_back(rational(s.krein().exact(i, j, k)));
          else
            qij.push_back(s.krein().value(i, j, k));
        }
        pi.push_back(pij);
        qi.push_back(qij);
      }
      p.push_back(pi);
      q.push_back(qi);
    }
    out["intersection_numbers"] = p;
    out["krein_numbers"] = q;
  }
  if (s.family() == Family::explicit_matrix)
    out["verification"] = Json{{"full", s.verification().full},
                               {"pairs_checked", s.verification().pairs_checked},
                               {"triples_checked", s.verification().triples_checked}};
  return out;
}

Json analysis_json(const AssociationScheme& s, const Subset& c, const SubsetAnalysis& an) {
  Json out = header("analyze");
  out["scheme"] = scheme_summary(s);
  const Json summary = scheme_summary(s);
  for (const char* key : {"family", "n", "q", "v", "k"})
    if (summary.contains(key)) out[key] = summary[key];
  out["code"] = c.source;
  out["size"] = an.subset_size;
  out["a"] = rationals(an.inner);
  out["b"] = rationals(an.dual);
  out["degree_set"] = an.degree_set;
  out["dual_degree_set"] = an.dual_degree_set;
  out["s"] = an.degree;
  out["s_star"] = an.dual_degree;
  out["zero_intervals"] = intervals(an.zero_intervals);
  out["dual_zero_intervals"] = intervals(an.dual_zero_intervals);
  Json b = Json::array();
  for (const auto& v : an.bounds) b.push_back(bound(v));
  out["bounds"] = b;
  return out;
}

OuterDistribution outer_for(const AssociationScheme& s, const Subset& c) {
  if (c.code) return outer_distribution(s, *c.code);
  return outer_distribution(s, c.vertices);
}

Json cr_check(const AssociationScheme& s, const Subset& c, std::optional<int> w, bool certify_rank) {
  const auto an = analyze_subset(s, c.vertices);
  const auto B = outer_for(s, c);
  const auto verdict = is_completely_regular(B);
  Json out = header("cr-check");
  out["scheme"] = scheme_summary(s);
  out["code"] = c.source;
  out["size"] = an.subset_size;
  out["outer_mode"] = B.mode == OuterMode::coset ? "coset" : "direct";
  out["rho"] = verdict.covering_radius;
  out["completely_regular"] = verdict.completely_regular;
  out["quotient_table"] = verdict.quotient_table;
  if (verdict.witness)
    out["witness"] = Json{format_vertex(s, verdict.witness->first), format_vertex(s, verdict.witness->second)};
  out["s_star"] = an.dual_degree;
  out["rank_B"] = B.rank();

  Json checks = Json::array();
  auto add = [&](int ww) {
    const auto m = check_mainth_hypothesis(an, B, ww);
    Json j{{"w", m.w}, {"holds", m.holds}, {"completely_regular", m.completely_regular}};
    if (m.failing_vertex) j["failing_vertex"] = format_vertex(s, *m.failing_vertex);
    checks.push_back(j);
  };
  if (w) {
    add(*w);
  } else {
    for (int ww = 0; ww <= s.num_classes() - an.dual_degree; ++ww)
      if (an.inner[ww] > 0) add(ww);
  }
  out["hypothesis_checks"] = checks;
  Json preds = Json::array();
  for (const auto& p : check_int_condition(an, B))
    preds.push_back(Json{{"interval", interval(p.interval)}, {"predicted", p.predicted}, {"confirmed", p.confirmed}});
  out["interval_predictions"] = preds;
  if (certify_rank) {
    if (an.zero_intervals.empty()) {
      out["rank_certificate"] = nullptr;
    } else {
      const auto r = rank_certificate(s, c.vertices, B, c.vertices.front(), an.zero_intervals.front());
      out["rank_certificate"] = Json{{"base_point", format_vertex(s, r.base_point)},
                                     {"interval", interval(r.interval)},
                                     {"w_x", r.w_x},
                                     {"t_x", r.t_x},
                                     {"terminal", r.terminal},
                                     {"num_vectors", r.num_vectors},
                                     {"vectors_rank", r.vectors_rank},
                                     {"rank_B", r.rank_B},
                                     {"independent", r.independent},
                                     {"bound_holds", r.bound_holds}};
    }
  }
  return out;
}

Json annihilate(const AssociationScheme& s, const Subset& c, bool dual) {
  const auto an = analyze_subset(s, c.vertices);
  const auto system = drg_ortho_polys(s, dual);
  const auto& roots = dual ? an.degree_set : an.dual_degree_set;
  const auto F = annihilator_from_roots(system, roots);
  const Rational residual = dual ? verify_qcar(s, an, system, F) : verify_pcar(s, an, system, F);
  Json out = header("annihilate");
  out["scheme"] = scheme_summary(s);
  out["code"] = c.source;
  out["dual"] = dual;
  out["root_indices"] = roots;
  std::vector<Rational> root_values;
  for (int r : roots) root_values.push_back(system.grid[r]);
  out["roots"] = rationals(root_values);
  out["monomial_coefficients"] = rationals(F.poly.coefficients());
  out["polynomial"] = F.poly.to_string();
  out["expansion"] = rationals(F.expansion);
  out["residual"] = rational(residual);
  return out;
}

Json induce(const AssociationScheme& s, const Subset& c, const InducedOptions& options) {
  const auto an = analyze_subset(s, c.vertices);
  if (!s.is_q_polynomial_as_ordered())
    fail(ErrorCode::not_polynomial_scheme, "induce needs a Q-polynomial scheme in its presented order");
  Json out = header("induce");
  out["scheme"] = scheme_summary(s);
  out["code"] = c.source;
  out["size"] = an.subset_size;
  out["degree_set"] = an.degree_set;
  out["s"] = an.degree;
  out["dual_zero_intervals"] = intervals(an.dual_zero_intervals);
  const auto F = restricted_idempotents(s, c.vertices);
  ProductOptions po;
  po.full = options.full_verify;
  po.sampled_triples = options.sampled_triples;
  po.seed = options.seed;
  const auto witness = find_qmainth_witness(F, an, po);
  out["hypothesis"] = witness ? Json{{"w_star", witness->w_star}, {"holds", true}} : Json{{"w_star", nullptr}, {"holds", false}};
  bool interval_licence = false;
  for (const auto& z : an.dual_zero_intervals) interval_licence = interval_licence || (!z.terminal && 2 * an.degree - 1 <= z.t);
  const bool licensed = witness.has_value() || interval_licence;
  const std::string licence = witness ? "product hypothesis with w* = " + std::to_string(witness->w_star)
                                      : "2s-1 <= t* on a dual zero interval";
  try {
    out["induced"] = induced(induce_scheme(s, c.vertices, licensed, licensed ? licence : "", options));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::not_a_scheme) throw;
    out["induced"] = Json{{"scheme_ok", false}, {"licensed", false}, {"reason", e.what()}};
  }
  return out;
}

Json spherical(const std::string& points, int kmax, std::optional<std::pair<int, int>> design,
               const InducedOptions& options) {
  const auto X = read_points_file(points);
  const auto rep = spherical_analysis(X, kmax, options);
  Json out = header("spherical");
  out["points"] = points;
  out["dimension"] = rep.dimension;
  out["size"] = rep.size;
  out["number_mode"] = rep.mode == PointMode::exact ? "EXACT" : "APPROX";
  if (rep.mode == PointMode::exact) {
    out["moments"] = rationals(rep.moments.exact);
    out["degree_set"] = rationals(rep.degrees.exact);
  } else {
    out["moments"] = rep.moments.real;
    out["moment_tolerance"] = rep.moments.tolerance;
    out["degree_set"] = rep.degrees.real;
  }
  out["s"] = rep.degrees.degree();
  Json iv = Json::array();
  for (const auto& z : rep.intervals) iv.push_back(Json{{"w", z.w}, {"t", z.t}, {"closed", z.closed}});
  out["intervals"] = iv;
  Json bounds = Json::array();
  bool candidate = false;
  for (const auto& b : rep.bounds) {
    bounds.push_back(Json{{"w", b.interval.w}, {"t", b.interval.t}, {"bound", b.bound}, {"satisfied", b.satisfied},
                          {"two_s_minus_one_le_t", b.sint}});
    candidate = candidate || b.sint;
  }
  out["bounds"] = bounds;
  out["open_problem_candidate"] = candidate;
  if (rep.induced) out["induced"] = induced(*rep.induced);
  if (design) {
    out["design"] = Json{{"w", design->first}, {"t", design->second},
                         {"verdict", design_check(rep.moments, design->first, design->second)}};
  }
  return out;
}

void emit(const Json& report, const std::string& path, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) fail(ErrorCode::invalid_input, "cannot write " + path);
  f << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delsarte-theory invariants of subsets of association schemes"};
  app.require_subcommand(1);
  std::size_t threads = 0;
  app.add_option("--threads", threads, "Worker thread cap (also DELSARTE_THREADS)");

  Common common;
  auto add_common = [&](CLI::App* sub, bool code) {
    sub->add_option("--scheme", common.scheme, "Scheme spec (JSON text or file)")->required();
    if (code) sub->add_option("--code", common.code, "Codeword file or builtin:<name>")->required();
    sub->add_option("--report", common.report, "Write the report to this file");
  };

  auto* info = app.add_subcommand("scheme-info", "Eigenmatrices, parameters and polynomial orderings");
  add_common(info, false);
  auto* analyze = app.add_subcommand("analyze", "Inner and dual distributions, intervals and bounds");
  add_common(analyze, true);

  auto* cr = app.add_subcommand("cr-check", "Outer distribution and complete regularity");
  add_common(cr, true);
  std::optional<int> cr_w;
  bool certify_rank = false;
  cr->add_option("--w", cr_w, "Check the hypothesis for this w only");
  cr->add_flag("--certify-rank", certify_rank, "Emit the rank certificate at the first codeword");

  auto* ann = app.add_subcommand("annihilate", "Annihilator polynomial and its residual");
  add_common(ann, true);
  bool dual = false;
  ann->add_flag("--dual", dual, "Annihilate the degree set instead of the dual degree set");

  InducedOptions induced_options;
  bool full_verify = false;
  auto add_verify = [&](CLI::App* sub) {
    sub->add_flag("--full-verify", full_verify, "Exhaustive verification regardless of size");
    sub->add_option("--sampled-triples", induced_options.sampled_triples, "Triples to sample otherwise");
    sub->add_option("--seed", induced_options.seed, "Sampling seed");
  };
  auto* ind = app.add_subcommand("induce", "Induced Q-polynomial scheme on the subset");
  add_common(ind, true);
  add_verify(ind);

  auto* sph = app.add_subcommand("spherical", "Gegenbauer moments and spherical dual zero intervals");
  std::string points;
  int kmax = 8;
  std::vector<int> design;
  sph->add_option("--points", points, "Point file")->required();
  sph->add_option("--kmax", kmax, "Moment horizon K")->check(CLI::PositiveNumber);
  sph->add_option("--design", design, "W T: check for a spherical (W,T)-design")->expected(2);
  sph->add_option("--report", common.report, "Write the report to this file");
  add_verify(sph);

  auto* rep = app.add_subcommand("reproduce-examples", "Recompute the reference codes and check them");
  std::string which = "all";
  ExampleOptions ex;
  rep->add_option("--which", which, "all, p, q, p1..p6, q1..q6, golay23, golay23x2, golay24");
  rep->add_option("--n", ex.n, "Parameter n of the two-by-two code");
  rep->add_option("--m", ex.m, "Parameter m of the Hamming codes");
  rep->add_option("--report", common.report, "Write the report to this file");
  add_verify(rep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (threads == 0)
      if (const char* env = std::getenv("DELSARTE_THREADS")) threads = std::strtoul(env, nullptr, 10);
    if (threads > 0) set_max_threads(threads);
    if (full_verify) induced_options.full_verify = true;

    Json report;
    if (info->parsed()) {
      report = scheme_info(load_scheme(common.scheme));
    } else if (analyze->parsed() || cr->parsed() || ann->parsed() || ind->parsed()) {
      const auto scheme = load_scheme(common.scheme);
      const auto subset = load_subset(common.code, scheme);
      if (analyze->parsed()) {
        const auto an = analyze_subset(scheme, subset.vertices);
        enforce_bounds(an.bounds);
        report = analysis_json(scheme, subset, an);
      } else if (cr->parsed()) {
        report = cr_check(scheme, subset, cr_w, certify_rank);
      } else if (ann->parsed()) {
        report = annihilate(scheme, subset, dual);
      } else {
        report = induce(scheme, subset, induced_options);
      }
    } else if (sph->parsed()) {
      std::optional<std::pair<int, int>> d;
      if (design.size() == 2) d = std::make_pair(design[0], design[1]);
      report = spherical(points, kmax, d, induced_options);
    } else if (rep->parsed()) {
      ex.full_verify = induced_options.full_verify;
      ex.sampled_triples = induced_options.sampled_triples;
      report = header("reproduce-examples");
      Json list = Json::array();
      for (const auto& id : example_ids(which)) list.push_back(reproduce_example(id, ex));
      report["examples"] = list;
      report["all_confirmed"] = true;
    }
    emit(report, common.report, out);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_violation(e.code()) ? kExitViolation : kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace delsarte::cli

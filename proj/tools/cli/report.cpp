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


#include "report.hpp"

#include "delsarte/spherical.hpp"

namespace delsarte::cli {

std::string version() { return DELSARTE_VERSION_STRING; }

Json rational(const Rational& r) {
  if (is_integer(r) && fits_int64(r.get_num())) return to_int64(r.get_num());
  return to_string(r);
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(rational(r));
  return out;
}

Json matrix(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json matrix(const RealMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

Json interval(const ZeroInterval& z) { return Json{{"w", z.w}, {"t", z.t}, {"terminal", z.terminal}}; }

Json intervals(const std::vector<ZeroInterval>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(interval(z));
  return out;
}

Json bound(const BoundVerdict& b) {
  return Json{{"interval", interval(b.interval)},
              {"kind", std::string(b.dual ? "dual" : "primal") + (b.terminal ? "-terminal" : "")},
              {"bound", b.bound},
              {"satisfied", b.satisfied},
              {"gap", b.gap}};
}

Json scheme_summary(const AssociationScheme& scheme) {
  Json out;
  out["descriptor"] = scheme.descriptor();
  switch (scheme.family()) {
    case Family::hamming:
      out["family"] = "hamming";
      out["n"] = scheme.family_parameters().first;
      out["q"] = scheme.family_parameters().second;
      break;
    case Family::johnson:
      out["family"] = "johnson";
      out["v"] = scheme.family_parameters().first;
      out["k"] = scheme.family_parameters().second;
      break;
    case Family::explicit_matrix:
      out["family"] = "explicit";
      break;
  }
  out["num_vertices"] = scheme.num_vertices();
  out["classes"] = scheme.num_classes();
  out["number_mode"] = to_string(scheme.number_mode());
  return out;
}

Json induced(const InducedScheme& s) {
  Json out;
  out["classes"] = s.classes;
  out["relation_values"] = s.relation_values;
  out["licensed"] = s.licensed;
  if (s.licensed) out["licence"] = s.licence;
  out["scheme_ok"] = s.scheme_ok;
  out["number_mode"] = to_string(s.number_mode);
  out["verification"] = Json{{"full", s.verification.full},
                             {"pairs_checked", s.verification.pairs_checked},
                             {"triples_checked", s.verification.triples_checked}};
  out["q_polynomial"] = s.q_ordering.has_value();
  out["ordering"] = s.q_ordering ? Json(*s.q_ordering) : Json(nullptr);
  return out;
}

Json header(const std::string& command) {
  Json out;
  out["schema"] = 1;
  out["command"] = command;
  out["version"] = version();
  out["tolerances"] = Json{{"eigen", kEigenTolerance},
                           {"norm", kNormTolerance},
                           {"degree", kDegreeTolerance},
                           {"moment_per_point", kMomentTolerance}};
  return out;
}

}  // namespace delsarte::cli

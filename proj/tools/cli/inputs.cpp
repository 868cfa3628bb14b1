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


#include "inputs.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "delsarte/errors.hpp"
#include "delsarte/io.hpp"
#include "delsarte/named_schemes.hpp"

namespace delsarte::cli {

namespace {

int get_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail(ErrorCode::invalid_input, std::string("scheme spec needs an integer \"") + key + "\"");
  return j[key].get<int>();
}

int suffix_int(const std::string& name, const std::string& prefix) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(name.substr(prefix.size()), &used);
    if (used + prefix.size() == name.size()) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorCode::invalid_input, "bad built-in code '" + name + "'");
}

}  // namespace

AssociationScheme load_scheme(const std::string& spec) {
  std::string text = spec;
  if (text.find_first_not_of(" \t\n") == std::string::npos || text[text.find_first_not_of(" \t\n")] != '{') {
    std::ifstream in(spec);
    if (!in) fail(ErrorCode::invalid_input, "cannot open scheme spec " + spec);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::invalid_input, std::string("scheme spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::invalid_input, "scheme spec must be a JSON object");
  if (j.contains("explicit")) {
    const auto& rel = j["explicit"].value("relations", nlohmann::json());
    if (!rel.is_array()) fail(ErrorCode::invalid_input, "explicit scheme needs a \"relations\" matrix");
    std::vector<std::vector<int>> rows;
    for (const auto& row : rel) {
      if (!row.is_array()) fail(ErrorCode::invalid_input, "relations must be a list of rows");
      rows.emplace_back();
      for (const auto& e : row) {
        if (!e.is_number_integer()) fail(ErrorCode::invalid_input, "relation entries must be integers");
        rows.back().push_back(e.get<int>());
      }
    }
    AssociationScheme s = verify_scheme(RelationMatrix::from_rows(rows), {});
    if (!s.is_p_polynomial_as_ordered() && s.orderings().p) s = s.in_p_order();
    if (!s.is_q_polynomial_as_ordered() && s.orderings().q) s = s.in_q_order();
    return s;
  }
  const std::string family = j.value("family", "");
  if (family == "hamming") return build_hamming(get_int(j, "n"), get_int(j, "q"));
  if (family == "johnson") return build_johnson(get_int(j, "v"), get_int(j, "k"));
  fail(ErrorCode::invalid_input, "unknown scheme family '" + family + "'");
}

BinaryLinearCode builtin_code(const std::string& name) {
  if (name.rfind("dual:", 0) == 0) return builtin_code(name.substr(5)).dual();
  if (name == "golay23") return golay23();
  if (name == "golay24") return golay24();
  if (name == "golay23x2") return append_free_bit(golay23());
  if (name.rfind("hamming:", 0) == 0) return hamming_code(suffix_int(name, "hamming:"));
  if (name.rfind("ext-hamming:", 0) == 0) return extended_hamming_code(suffix_int(name, "ext-hamming:"));
  if (name.rfind("two-by-two:", 0) == 0) return two_by_two_code(suffix_int(name, "two-by-two:"));
  fail(ErrorCode::invalid_input, "unknown built-in code '" + name + "'");
}

Subset load_subset(const std::string& source, const AssociationScheme& scheme) {
  Subset out;
  out.source = source;
  if (source.rfind("builtin:", 0) == 0) {
    out.code = builtin_code(source.substr(8));
    const auto [n, q] = scheme.family_parameters();
    if (scheme.family() != Family::hamming || q != 2 || n != out.code->length())
      fail(ErrorCode::invalid_input, "built-in code of length " + std::to_string(out.code->length()) +
                                         " needs H(" + std::to_string(out.code->length()) + ",2)");
    out.vertices = out.code->codewords();
    return out;
  }
  out.vertices = read_subset_file(source, scheme);
  return out;
}

}  // namespace delsarte::cli

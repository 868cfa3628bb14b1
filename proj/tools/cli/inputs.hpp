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


#ifndef DELSARTE_CLI_INPUTS_HPP
#define DELSARTE_CLI_INPUTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "delsarte/codes.hpp"
#include "delsarte/scheme.hpp"

namespace delsarte::cli {

/// Parses a scheme description given inline (text starting with '{') or as a
/// file path:
///   {"family":"hamming","n":N,"q":Q}
///   {"family":"johnson","v":V,"k":K}
///   {"explicit":{"relations":[[...],...]}}
/// Explicit schemes are re-presented in a P- and Q-polynomial order when one exists.
AssociationScheme load_scheme(const std::string& spec);

struct Subset {
  std::vector<Vertex> vertices;
  /// Set for built-in binary linear codes; enables coset-mode outer distributions.
  std::optional<BinaryLinearCode> code;
  std::string source;
};

/// Built-in binary linear codes, optionally prefixed with "dual:":
///   golay23, golay24, golay23x2, hamming:M, ext-hamming:M, two-by-two:N
BinaryLinearCode builtin_code(const std::string& name);

/// "builtin:<name>" or a codeword file.
Subset load_subset(const std::string& source, const AssociationScheme& scheme);

}  // namespace delsarte::cli

#endif  // DELSARTE_CLI_INPUTS_HPP

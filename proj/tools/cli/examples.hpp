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


#ifndef DELSARTE_CLI_EXAMPLES_HPP
#define DELSARTE_CLI_EXAMPLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace delsarte::cli {

struct ExampleOptions {
  int n = 4;  // C = {0,1} x {0^(2n-1), 1^(2n-1)}
  int m = 3;  // Hamming and extended Hamming codes
  std::optional<bool> full_verify;
  std::uint64_t sampled_triples = 1'000'000;
};

/// Codes and their duals with known distributions, intervals and degrees.
///   p1..p6: two-by-two, Hamming, extended Hamming, Golay 23, Golay 23 x {0,1}, Golay 24
///   q1..q6: the dual codes of p1..p6
/// Aliases: all, p, q, golay23 (p4), golay23x2 (p5), golay24 (p6).
std::vector<std::string> example_ids(const std::string& which);

/// Computes one example and checks every expected value; a mismatch raises
/// theorem_violation.
Json reproduce_example(const std::string& id, const ExampleOptions& options);

}  // namespace delsarte::cli

#endif  // DELSARTE_CLI_EXAMPLES_HPP

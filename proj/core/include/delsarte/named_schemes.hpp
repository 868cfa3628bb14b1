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


#ifndef DELSARTE_NAMED_SCHEMES_HPP
#define DELSARTE_NAMED_SCHEMES_HPP

#include <cstdint>
#include <vector>

#include "delsarte/number.hpp"
#include "delsarte/scheme.hpp"

namespace delsarte {

/// K_k(i) = sum_j (-1)^j (q-1)^(k-j) C(i,j) C(n-i,k-j).
Integer krawtchouk(int n, int q, int k, int i);

/// Eigenvalue of the Johnson relation A_i on the eigenspace V_j of J(v,k):
/// sum_h (-1)^h C(j,h) C(k-j,i-h) C(v-k-j,i-h).
Integer eberlein(int v, int k, int i, int j);

/// H(n,q): vertices 0..q^n-1, base-q digits, first letter most significant.
AssociationScheme build_hamming(int n, int q);
/// J(v,k): vertices are k-subsets of {0..v-1} in colex rank order.
AssociationScheme build_johnson(int v, int k);

struct NamedSchemeSpec {
  Family family = Family::hamming;
  int first = 0;   // n or v
  int second = 0;  // q or k
};

AssociationScheme build_named(const NamedSchemeSpec& spec);

/// Packs a word (digits in 0..q-1, first most significant) into a vertex.
Vertex hamming_vertex(const std::vector<int>& digits, int q);
std::vector<int> hamming_digits(Vertex x, int n, int q);

/// Colex rank of a k-subset given as a bit mask, and its inverse.
std::uint64_t johnson_rank(int v, int k, std::uint64_t mask);
std::uint64_t johnson_unrank(int v, int k, std::uint64_t rank);

}  // namespace delsarte

#endif  // DELSARTE_NAMED_SCHEMES_HPP

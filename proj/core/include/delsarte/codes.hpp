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


#ifndef DELSARTE_CODES_HPP
#define DELSARTE_CODES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "delsarte/number.hpp"

namespace delsarte {

/// Binary linear code of length n <= 63. Words are vertices of H(n,2):
/// the letter at position c (0-based, left to right) is bit n-1-c.
class BinaryLinearCode {
 public:
  BinaryLinearCode(int length, const std::vector<std::uint64_t>& generators);

  int length() const noexcept { return n_; }
  int dimension() const noexcept { return static_cast<int>(basis_.size()); }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << basis_.size(); }

  /// Reduced row-echelon basis; pivots()[r] is the leading bit of basis()[r].
  const std::vector<std::uint64_t>& basis() const noexcept { return basis_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  /// All codewords, ascending.
  std::vector<Vertex> codewords() const;
  bool contains(Vertex x) const { return reduce(x) == 0; }
  /// Canonical representative of x + C: the unique coset member with no pivot bits.
  Vertex reduce(Vertex x) const;
  /// Canonical coset representatives (all words supported off the pivots), ascending.
  std::vector<Vertex> coset_representatives() const;

  BinaryLinearCode dual() const;

 private:
  int n_;
  std::vector<std::uint64_t> basis_;
  std::vector<int> pivots_;
};

/// [23,12,7] binary Golay code, cyclic with generator 1+x^2+x^4+x^5+x^6+x^10+x^11.
BinaryLinearCode golay23();
/// [24,12,8] extended Golay code (parity appended as the last letter).
BinaryLinearCode golay24();
/// [2^m-1, 2^m-m-1, 3] Hamming code, m >= 2.
BinaryLinearCode hamming_code(int m);
/// [2^m, 2^m-m-1, 4] extended Hamming code.
BinaryLinearCode extended_hamming_code(int m);
/// {0,1} x {0...0, 1...1} in H(2n,2).
BinaryLinearCode two_by_two_code(int n);
/// C x {0,1} for a code C of length n.
BinaryLinearCode append_free_bit(const BinaryLinearCode& code);
/// Appends an overall parity letter.
BinaryLinearCode extend_by_parity(const BinaryLinearCode& code);

std::string word_to_string(Vertex x, int n);

}  // namespace delsarte

#endif  // DELSARTE_CODES_HPP

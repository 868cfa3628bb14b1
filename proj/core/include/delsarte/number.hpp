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

#ifndef DELSARTE_NUMBER_HPP
#define DELSARTE_NUMBER_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace delsarte {

using Integer = mpz_class;
using Rational = mpq_class;

/// Vertices of a scheme are dense indices 0..|X|-1.
using Vertex = std::uint64_t;

/// Exact decimal rendering: "p/q" for non-integers, "p" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "p/q" or "p" (optional sign). Throws delsarte::Error on anything else.
Rational parse_rational(std::string_view token);

Integer binomial(long n, long k);
Integer power(const Integer& base, unsigned long exponent);

bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace delsarte

#endif  // DELSARTE_NUMBER_HPP

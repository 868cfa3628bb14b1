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

#include "delsarte/number.hpp"

#include <cctype>
#include <limits>

#include "delsarte/errors.hpp"

namespace delsarte {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view token) {
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(token)) fail(ErrorCode::invalid_input, "not a rational: '" + std::string(token) + "'");
    return Rational(parse_integer(token));
  }
  const auto num = token.substr(0, slash);
  const auto den = token.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-' || den[0] == '+')
    fail(ErrorCode::invalid_input, "not a rational: '" + std::string(token) + "'");
  Integer d = parse_integer(den);
  if (d == 0) fail(ErrorCode::invalid_input, "zero denominator in '" + std::string(token) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer power(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

bool fits_int64(const Integer& z) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return z >= lo && z <= hi;
}

std::int64_t to_int64(const Integer& z) {
  if (!fits_int64(z)) fail(ErrorCode::parameter_out_of_range, "integer exceeds 64 bits: " + z.get_str());
  return std::stoll(z.get_str());
}

}  // namespace delsarte

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


#include "delsarte/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "delsarte/errors.hpp"
#include "delsarte/named_schemes.hpp"

namespace delsarte {

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
  fail(ErrorCode::invalid_input, "line " + std::to_string(line) + ": " + what);
}

long parse_long(const std::string& token, std::size_t line) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) bad_line(line, "expected an integer, got '" + token + "'");
  return v;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::invalid_input, "cannot open " + path);
  return in;
}

}  // namespace

std::vector<Vertex> read_subset(std::istream& in, const AssociationScheme& scheme) {
  std::vector<Vertex> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = strip(raw);
    if (s.empty()) continue;
    switch (scheme.family()) {
      case Family::hamming: {
        const auto [n, q] = scheme.family_parameters();
        if (q > 10) bad_line(line, "word files support q <= 10");
        if (static_cast<int>(s.size()) != n) bad_line(line, "expected " + std::to_string(n) + " letters");
        std::vector<int> digits(n);
        for (int i = 0; i < n; ++i) {
          const int c = s[i] - '0';
          if (c < 0 || c >= q) bad_line(line, std::string("letter '") + s[i] + "' outside 0.." + std::to_string(q - 1));
          digits[i] = c;
        }
        out.push_back(hamming_vertex(digits, q));
        break;
      }
      case Family::johnson: {
        const auto [v, k] = scheme.family_parameters();
        std::istringstream tokens(s);
        std::string tok;
        std::uint64_t mask = 0;
        int count = 0;
        while (tokens >> tok) {
          const long e = parse_long(tok, line);
          if (e < 1 || e > v) bad_line(line, "element " + tok + " outside 1.." + std::to_string(v));
          if (mask >> (e - 1) & 1) bad_line(line, "repeated element " + tok);
          mask |= std::uint64_t{1} << (e - 1);
          ++count;
        }
        if (count != k) bad_line(line, "expected " + std::to_string(k) + " elements");
        out.push_back(johnson_rank(v, k, mask));
        break;
      }
      case Family::explicit_matrix: {
        const long x = parse_long(s, line);
        if (x < 0 || static_cast<std::uint64_t>(x) >= scheme.num_vertices()) bad_line(line, "vertex " + s + " out of range");
        out.push_back(static_cast<Vertex>(x));
        break;
      }
    }
  }
  return out;
}

std::vector<Vertex> read_subset_file(const std::string& path, const AssociationScheme& scheme) {
  auto in = open(path);
  return read_subset(in, scheme);
}

std::string format_vertex(const AssociationScheme& scheme, Vertex x) {
  switch (scheme.family()) {
    case Family::hamming: {
      std::string s;
      for (int d : hamming_digits(x, scheme.family_parameters().first, scheme.family_parameters().second)) s += static_cast<char>('0' + d);
      return s;
    }
    case Family::johnson: {
      const auto mask = johnson_unrank(scheme.family_parameters().first, scheme.family_parameters().second, x);
      std::string s;
      for (int e = 0; e < 64; ++e)
        if (mask >> e & 1) s += (s.empty() ? "" : " ") + std::to_string(e + 1);
      return s;
    }
    case Family::explicit_matrix:
      break;
  }
  return std::to_string(x);
}

PointSet read_points(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  bool exact = true;
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string s = strip(raw);
    if (s.empty()) continue;
    std::istringstream tokens(s);
    std::vector<std::string> row;
    std::string tok;
    while (tokens >> tok) {
      if (tok.find_first_of(".eE") != std::string::npos) exact = false;
      row.push_back(tok);
    }
    rows.push_back(std::move(row));
  }
  if (exact) {
    std::vector<std::vector<Rational>> pts;
    for (const auto& row : rows) {
      pts.emplace_back();
      for (const auto& tok : row) pts.back().push_back(parse_rational(tok));
    }
    return PointSet::from_rational(std::move(pts));
  }
  std::vector<std::vector<double>> pts;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    pts.emplace_back();
    for (const auto& tok : rows[r]) {
      double v = 0;
      if (tok.find('/') != std::string::npos) {
        v = parse_rational(tok).get_d();
      } else {
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) bad_line(r + 1, "bad coordinate '" + tok + "'");
      }
      pts.back().push_back(v);
    }
  }
  return PointSet::from_real(std::move(pts));
}

PointSet read_points_file(const std::string& path) {
  auto in = open(path);
  return read_points(in);
}

}  // namespace delsarte

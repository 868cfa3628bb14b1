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


#ifndef DELSARTE_IO_HPP
#define DELSARTE_IO_HPP

#include <istream>
#include <string>
#include <vector>

#include "delsarte/scheme.hpp"
#include "delsarte/spherical.hpp"

namespace delsarte {

/// Reads a subset of `scheme`. Blank lines and text after '#' are ignored.
///   H(n,q): one word per line, n characters from 0..q-1 (q <= 10).
///   J(v,k): k distinct integers from 1..v per line.
///   explicit: one 0-based vertex index per line.
/// Errors carry the 1-based line number.
std::vector<Vertex> read_subset(std::istream& in, const AssociationScheme& scheme);
std::vector<Vertex> read_subset_file(const std::string& path, const AssociationScheme& scheme);

/// One point per line, whitespace separated coordinates. All tokens of the
/// form "p/q" or integers give an exact point set; any decimal token switches
/// the whole set to floating point.
PointSet read_points(std::istream& in);
PointSet read_points_file(const std::string& path);

/// Inverse of read_subset for a single vertex.
std::string format_vertex(const AssociationScheme& scheme, Vertex x);

}  // namespace delsarte

#endif  // DELSARTE_IO_HPP

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


#ifndef DELSARTE_CLI_REPORT_HPP
#define DELSARTE_CLI_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "delsarte/distributions.hpp"
#include "delsarte/induced.hpp"
#include "delsarte/matrix.hpp"
#include "delsarte/scheme.hpp"

namespace delsarte::cli {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, everything else "p/q" strings.
Json rational(const Rational& r);
Json rationals(const std::vector<Rational>& v);
Json matrix(const RatMatrix& m);
Json matrix(const RealMatrix& m);

Json interval(const ZeroInterval& z);
Json intervals(const std::vector<ZeroInterval>& v);
Json bound(const BoundVerdict& b);
Json scheme_summary(const AssociationScheme& scheme);
Json induced(const InducedScheme& s);

/// Common report header.
Json header(const std::string& command);

std::string version();

}  // namespace delsarte::cli

#endif  // DELSARTE_CLI_REPORT_HPP

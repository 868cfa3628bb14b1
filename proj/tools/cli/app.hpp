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


#ifndef DELSARTE_CLI_APP_HPP
#define DELSARTE_CLI_APP_HPP

#include <ostream>

namespace delsarte::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitViolation = 2;

/// Runs the command line; reports go to `out` unless --report names a file.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace delsarte::cli

#endif  // DELSARTE_CLI_APP_HPP

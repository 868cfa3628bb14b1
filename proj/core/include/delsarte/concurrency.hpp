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

#ifndef DELSARTE_CONCURRENCY_HPP
#define DELSARTE_CONCURRENCY_HPP

#include <cstddef>
#include <functional>

namespace delsarte {

/// Upper bound on worker threads used by data-parallel loops. Defaults to
/// DELSARTE_THREADS from the environment, else the hardware concurrency.
std::size_t max_threads();
void set_max_threads(std::size_t n);

/// Runs body(chunk, begin, end) over a fixed partition of [0, n) into
/// `chunks` pieces. The partition does not depend on the thread count, so
/// reductions indexed by chunk are reproducible.
void parallel_chunks(std::size_t n, std::size_t chunks,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace delsarte

#endif  // DELSARTE_CONCURRENCY_HPP

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

#include "delsarte/concurrency.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace delsarte {

namespace {

std::size_t initial_threads() {
  if (const char* env = std::getenv("DELSARTE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

std::atomic<std::size_t>& thread_limit() {
  static std::atomic<std::size_t> limit{initial_threads()};
  return limit;
}

}  // namespace

std::size_t max_threads() { return thread_limit().load(); }

void set_max_threads(std::size_t n) { thread_limit().store(std::max<std::size_t>(1, n)); }

void parallel_chunks(std::size_t n, std::size_t chunks,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  chunks = std::max<std::size_t>(1, std::min(chunks, n == 0 ? 1 : n));
  auto bounds = [&](std::size_t c) { return std::pair{n * c / chunks, n * (c + 1) / chunks}; };
  const std::size_t workers = std::min(max_threads(), chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) {
      auto [b, e] = bounds(c);
      body(c, b, e);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t c = next++; c < chunks; c = next++) {
        auto [b, e] = bounds(c);
        body(c, b, e);
      }
    });
  for (auto& t : pool) t.join();
}

}  // namespace delsarte

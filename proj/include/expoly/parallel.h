// Copyright 2026 The expoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef EXPOLY_PARALLEL_H_
#define EXPOLY_PARALLEL_H_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace expoly {

// Splits [0, total) into at most `workers` contiguous chunks and runs
// fn(chunk_index, lo, hi) for each, one thread per chunk. Chunk boundaries
// depend only on (total, workers), so callers that reduce per-chunk results
// by chunk index get schedule-independent output. The first exception thrown
// by any chunk is rethrown after all threads join.
template <class Fn>
std::size_t run_chunks(uint64_t total, unsigned workers, Fn&& fn) {
  const uint64_t chunks = std::max<uint64_t>(1, std::min<uint64_t>(workers, total));
  if (chunks == 1) {
    fn(std::size_t{0}, uint64_t{0}, total);
    return 1;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (uint64_t c = 0; c < chunks; ++c) {
    const auto lo = static_cast<uint64_t>(static_cast<unsigned __int128>(total) * c / chunks);
    const auto hi = static_cast<uint64_t>(static_cast<unsigned __int128>(total) * (c + 1) / chunks);
    threads.emplace_back([&, c, lo, hi] {
      try {
        fn(static_cast<std::size_t>(c), lo, hi);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return static_cast<std::size_t>(chunks);
}

inline unsigned chunk_count(uint64_t total, unsigned workers) {
  return static_cast<unsigned>(std::max<uint64_t>(1, std::min<uint64_t>(workers, total)));
}

}  // namespace expoly

#endif  // EXPOLY_PARALLEL_H_

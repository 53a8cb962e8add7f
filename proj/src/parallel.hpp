// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VCGAME_SRC_PARALLEL_HPP_
#define VCGAME_SRC_PARALLEL_HPP_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace vcgame::internal {

// Splits [0, count) into contiguous chunks, one per worker, and calls
// fn(begin, end) on each. The first exception thrown by a worker is
// rethrown on the calling thread.
template <typename Fn>
void ParallelFor(std::uint64_t count, int threads, Fn&& fn) {
  const std::uint64_t workers = std::clamp<std::uint64_t>(
      threads < 1 ? 1 : static_cast<std::uint64_t>(threads), 1,
      std::max<std::uint64_t>(count, 1));
  if (workers == 1) {
    fn(std::uint64_t{0}, count);
    return;
  }
  std::exception_ptr error;
  std::mutex mu;
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(count, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        try {
          fn(begin, end);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace vcgame::internal

#endif  // VCGAME_SRC_PARALLEL_HPP_

// Copyright 2026 The pa-lab Authors
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

#ifndef PALAB_PARALLEL_H_
#define PALAB_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace palab {

// Number of worker threads for `jobs`; non-positive means one per core.
inline unsigned ResolveJobs(int jobs) {
  if (jobs > 0) return static_cast<unsigned>(jobs);
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads and returns the
// results indexed by i, so any aggregation over the vector is independent of
// the schedule. The first exception thrown by a worker is rethrown.
template <typename Fn>
auto RunIndexed(uint64_t count, int jobs, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, uint64_t>> {
  using Result = std::invoke_result_t<Fn&, uint64_t>;
  static_assert(!std::is_same_v<Result, bool>,
                "std::vector<bool> cannot be written concurrently");
  std::vector<Result> results(count);
  const unsigned workers =
      static_cast<unsigned>(std::min<uint64_t>(ResolveJobs(jobs), count));
  if (workers <= 1) {
    for (uint64_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (uint64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace palab

#endif  // PALAB_PARALLEL_H_

// Copyright 2026 The FrostKit Authors.
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

#ifndef FROSTKIT_PARALLEL_H_
#define FROSTKIT_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <thread>
#include <type_traits>
#include <vector>

namespace frostkit {

// Applies `fn` to every item on up to `workers` threads. Results are in
// input order. `fn` must not throw and must not touch shared mutable state.
template <typename In, typename Fn>
auto ParallelMap(const std::vector<In> &items, int workers, Fn fn)
    -> std::vector<std::invoke_result_t<Fn &, const In &>> {
  using Out = std::invoke_result_t<Fn &, const In &>;
  std::vector<Out> results(items.size());
  size_t threads = std::min<size_t>(std::max(workers, 1), items.size());
  if (threads <= 1) {
    for (size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
    return results;
  }
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i = next++; i < items.size(); i = next++) {
      results[i] = fn(items[i]);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  for (std::thread &t : pool) t.join();
  return results;
}

}  // namespace frostkit

#endif  // FROSTKIT_PARALLEL_H_

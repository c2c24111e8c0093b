// Copyright 2026 The gpgsim Authors
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

#ifndef GPGSIM_HARNESS_PARALLEL_HPP
#define GPGSIM_HARNESS_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace gpgsim::harness {

/// Worker count for `requested` (<= 0 means hardware concurrency), at least 1.
inline int resolve_threads(int requested) {
    if (requested > 0) {
        return requested;
    }
    return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

/// f applied to every item on a pool of `threads` workers. Results keep the item order.
/// The first exception thrown by any worker is rethrown after all workers stop.
template <typename T, typename F>
auto parallel_map(const std::vector<T> &items, F &&f, int threads) {
    using R = std::invoke_result_t<F &, const T &>;
    std::vector<R> out(items.size());
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex lock;
    auto work = [&] {
        for (size_t i = next++; i < items.size(); i = next++) {
            try {
                out[i] = f(items[i]);
            } catch (...) {
                std::lock_guard<std::mutex> g(lock);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = items.size();
            }
        }
    };
    int n = std::min<int>(resolve_threads(threads), std::max<size_t>(items.size(), 1));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; t++) {
        pool.emplace_back(work);
    }
    work();
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

}  // namespace gpgsim::harness

#endif

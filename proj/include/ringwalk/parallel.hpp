// Copyright 2026 The ringwalk authors
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

#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace ringwalk {

/// Number of worker threads used by grid and kernel scans.
/// RINGWALK_THREADS caps it; defaults to the hardware concurrency.
inline int scan_threads() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("RINGWALK_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) return cap;
        if (cap >= 1) return cap;
    }
    return hw;
}

/// Static partition of [0, n) across scan_threads() workers. Each worker
/// runs f(begin, end) on its contiguous range; results must be written to
/// pre-sized, index-disjoint storage so the reduction is deterministic.
template <typename F>
void parallel_ranges(std::size_t n, F&& f) {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(scan_threads()), n ? n : 1);
    if (workers <= 1) {
        f(std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&f, begin, end] { f(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace ringwalk

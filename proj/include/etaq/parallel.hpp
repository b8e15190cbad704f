#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace etaq {

// Run fn(i) for i in [0, n) on up to `threads` workers.  Work items are
// claimed from a shared counter; callers are responsible for writing results
// into per-index slots so the merged output is deterministic.
inline void parallel_for_index(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    int count = std::min<int>(threads, static_cast<int>(n));
    pool.reserve(count);
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace etaq

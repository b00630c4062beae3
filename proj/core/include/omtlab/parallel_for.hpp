#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace omtlab {

inline int default_thread_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Static contiguous chunking of [0, n) over `threads` workers:
// fn(worker, begin, end). Deterministic assignment, so per-worker
// accumulators merged in worker order give results independent of
// scheduling.
inline void parallel_for_chunks(long n, int threads,
                                const std::function<void(int, long, long)>& fn) {
    if (threads < 1) threads = 1;
    if (threads == 1 || n < 2) {
        if (n > 0) fn(0, 0, n);
        return;
    }
    if (threads > n) threads = static_cast<int>(n);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        const long begin = n * w / threads;
        const long end = n * (w + 1) / threads;
        pool.emplace_back(fn, w, begin, end);
    }
    for (auto& t : pool) t.join();
}

}  // namespace omtlab

// parallel.hpp — static-partition parallel index loop over std::thread

#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace transcav::parallel {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, count). Partitioning is static and contiguous, and
// each index writes only its own output slots, so results are identical for
// any thread count. fn must not throw across the thread boundary.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    const int nt = resolve_threads(threads);
    if (nt <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(nt, count);
    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace transcav::parallel

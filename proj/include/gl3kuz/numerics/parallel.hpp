#pragma once

// Deterministic fork-join helper.  Work is split into a fixed number of
// chunks independent of the thread count and partial results are combined
// in chunk order, so outputs are bit-identical for any --threads value.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace gl3kuz::numerics {

inline int& max_threads() {
    static int n = static_cast<int>(std::thread::hardware_concurrency());
    return n;
}

inline void set_max_threads(int n) { max_threads() = std::max(1, n); }

/// Runs body(i) for i in [0, n) across workers.  body must only touch
/// per-index state; combine results yourself if needed (see map_reduce).
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
    int workers = std::min<std::size_t>(std::max(1, max_threads()), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                body(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

/// Deterministic map-reduce: partials[i] = map(i), reduced in index order.
template <typename T, typename Map, typename Reduce>
T parallel_map_reduce(std::size_t n, T init, Map&& map, Reduce&& reduce) {
    std::vector<T> partials(n);
    parallel_for(n, [&](std::size_t i) { partials[i] = map(i); });
    T acc = init;
    for (std::size_t i = 0; i < n; ++i) acc = reduce(acc, partials[i]);
    return acc;
}

} // namespace gl3kuz::numerics

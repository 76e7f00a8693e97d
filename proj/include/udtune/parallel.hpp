#pragma once

#include <atomic>
#include <cstdlib>
#include <cstddef>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace udtune {

// Effective worker count: UDTUNE_WORKERS env var wins, then the requested
// value, then hardware concurrency.  0 means "auto".
inline unsigned resolve_workers(unsigned requested) {
    if (const char* env = std::getenv("UDTUNE_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? hc : 1;
}

// Runs fn(i) for every i in [0, count) on up to `workers` threads.  Work is
// claimed through an atomic counter; fn must not throw and must write only
// to slot i of any shared output.
inline void parallel_for(std::size_t count, unsigned workers,
                         const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    if (workers > count) workers = static_cast<unsigned>(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count;
                 i = next.fetch_add(1)) {
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace udtune

#pragma once

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace augur {

// Worker cap: AUGUR_THREADS if set, else the hardware concurrency.
inline std::size_t worker_count() {
    if (const char* env = std::getenv("AUGUR_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<std::size_t>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs f(0..n-1) across workers. Each index must write only its own slots;
// results are then deterministic regardless of the worker count.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    std::size_t workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = cursor.fetch_add(1); i < n; i = cursor.fetch_add(1)) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace augur

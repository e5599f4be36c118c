#pragma once

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace gprdpf {

// Worker count: the GPRDPF_THREADS environment variable overrides hardware concurrency.
inline unsigned resolve_thread_count() {
    if (const char* env = std::getenv("GPRDPF_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Runs fn(i) for i in [0, n). fn must be independent across indices and must not throw;
// callers store results by index, so the output order never depends on scheduling.
template <class Fn>
void parallel_for_index(std::size_t n, Fn&& fn) {
    const std::size_t threads = std::min<std::size_t>(resolve_thread_count(), n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace gprdpf

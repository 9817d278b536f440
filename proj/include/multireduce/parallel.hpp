#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace multireduce {

// Process-wide cap on worker threads (CLI --threads). 0 = hardware concurrency.
int thread_budget();
void set_thread_budget(int n);

// Runs fn(i) for i in [0, n). Results must be written to per-index slots so the
// outcome is independent of scheduling.
template <typename Fn>
void parallel_for(std::int64_t n, Fn&& fn) {
    int workers = thread_budget();
    if (workers <= 1 || n <= 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    workers = static_cast<int>(std::min<std::int64_t>(workers, n));
    std::atomic<std::int64_t> next(0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error;
    std::mutex err_mutex;
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            while (true) {
                std::int64_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace multireduce

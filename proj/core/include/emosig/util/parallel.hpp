#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace emosig::util {

/// Runs fn(0..n-1) across up to `threads` workers (hardware concurrency when
/// <= 0). Work items are claimed from a shared counter; fn must be safe to
/// call concurrently for distinct indices.
inline void parallel_for(size_t n, int threads, const std::function<void(size_t)>& fn) {
    if (n == 0) return;
    size_t worker_count = threads > 0 ? static_cast<size_t>(threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
    worker_count = std::min(worker_count, n);
    if (worker_count <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (size_t t = 0; t < worker_count; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace emosig::util

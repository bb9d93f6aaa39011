#pragma once

#include <atomic>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace mhn {

/// Index-parallel sweep. Results must be written to per-index slots so that
/// merged output is independent of scheduling.
inline void parallel_for(size_t n, unsigned workers, const std::function<void(size_t)>& fn) {
    if (workers == 0) workers = std::thread::hardware_concurrency();
    if (workers <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    unsigned count = static_cast<unsigned>(std::min<size_t>(workers, n));
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned t = 0; t < count; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::scoped_lock lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace mhn

// Minimal fork-join helper for embarrassingly parallel batches. Results must
// be written to per-index slots by the callable; ordering is then canonical
// regardless of how work was scheduled. BOHR_MAJORANT_THREADS caps the pool.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace majorant {

inline int max_threads() {
    int cap = static_cast<int>(std::thread::hardware_concurrency());
    if (cap < 1)
        cap = 1;
    if (const char* env = std::getenv("BOHR_MAJORANT_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed >= 1)
            cap = std::min(cap, parsed);
    }
    return cap;
}

template <typename Fn>
void parallel_for(int count, Fn&& fn) {
    const int threads = std::min(max_threads(), std::max(count, 1));
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (int i = t; i < count; i += threads)
                    fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
            }
        });
    }
    for (auto& worker : pool)
        worker.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

}  // namespace majorant

#pragma once

#include <atomic>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace hfold {

/// Run fn(i) for i in [0, n) across a fixed number of worker threads.
/// Work items must be independent; results should be written to
/// preallocated per-index slots so output order is deterministic.
inline void parallel_for(long n, const std::function<void(long)>& fn, int jobs = 0)
{
    if (jobs <= 0)
        jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 1 || n <= 1) {
        for (long i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            while (true) {
                long i = next.fetch_add(1);
                if (i >= n)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(error_mu);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace hfold

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rde
{
//! Evaluate fn(i) for i in [0, n) on a fixed pool of workers.
//!
//! Results land at index i regardless of which worker produced them, so any
//! reduction over the returned vector in index order is independent of the
//! worker count. The first exception thrown by a worker is rethrown.
template<class T, class F>
std::vector<T> parallel_map(std::size_t n, unsigned workers, F&& fn)
{
    std::vector<T> out(n);
    workers = std::max(1u, workers);
    if (workers == 1 || n < 2)
    {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = fn(i);
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (;;)
        {
            std::size_t i = next.fetch_add(1);
            if (i >= n)
                return;
            try
            {
                out[i] = fn(i);
            }
            catch (...)
            {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(n);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    auto count = std::min<std::size_t>(workers, n);
    pool.reserve(count);
    for (std::size_t w = 0; w < count; ++w)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

}  // namespace rde

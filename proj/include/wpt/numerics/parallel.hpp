// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_NUMERICS_PARALLEL_HPP
#define WPT_NUMERICS_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wpt::numerics
{
    // Runs fn(i) for i in [0, n) on up to `workers` threads. Work is handed out
    // by index, so callers that write result[i] get order-independent output.
    // The first exception thrown by any task is rethrown after all threads join.
    template <class Fn>
    void parallel_for(std::size_t n, unsigned workers, Fn &&fn)
    {
        workers = std::max(1u, std::min<unsigned>(workers, unsigned(std::max<std::size_t>(n, 1))));
        if (workers == 1)
        {
            for (std::size_t i = 0; i < n; ++i)
                fn(i);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto body = [&]()
        {
            for (std::size_t i = next++; i < n; i = next++)
            {
                try
                {
                    fn(i);
                }
                catch (...)
                {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < workers; ++w)
            pool.emplace_back(body);
        body();
        for (auto &t : pool)
            t.join();
        if (error)
            std::rethrow_exception(error);
    }
}

#endif

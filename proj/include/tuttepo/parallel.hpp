#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tuttepo {

namespace detail {
inline std::atomic<unsigned>& thread_setting()
{
    static std::atomic<unsigned> setting{0};
    return setting;
}
} // namespace detail

/// Worker count used by parallel_for. Zero restores the default (hardware concurrency).
inline void set_thread_count(unsigned count) { detail::thread_setting().store(count); }

inline unsigned thread_count()
{
    const unsigned s = detail::thread_setting().load();
    if (s != 0)
        return s;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls body(i) for every i in [0, count). Results must be written to
/// per-index slots; the first exception thrown by any worker is rethrown.
template <class Body>
void parallel_for(std::size_t count, Body&& body)
{
    const std::size_t workers = std::min<std::size_t>(thread_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(count);
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w)
        pool.emplace_back(run);
    run();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace tuttepo

#ifndef DICHROMA_PARALLEL_HPP
#define DICHROMA_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace dichroma
{
    /// An explicit request wins; otherwise DICHROMA_THREADS; otherwise the
    /// hardware concurrency (at least 1).
    auto resolve_threads(std::optional<std::size_t> requested = std::nullopt) -> std::size_t;

    /// Evaluates f(0..count-1) on up to `threads` workers. Results are stored
    /// by index, so the output never depends on scheduling. The first
    /// exception (by index) is rethrown after all workers stop.
    template <typename F>
    auto parallel_map(std::size_t count, std::size_t threads, F && f) -> std::vector<decltype(f(std::size_t{}))>
    {
        using Result = decltype(f(std::size_t{}));
        std::vector<std::optional<Result>> slots(count);
        std::vector<std::exception_ptr> errors(count);
        std::atomic<std::size_t> next{0};

        auto work = [&] {
            for (;;) {
                auto i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    slots[i].emplace(f(i));
                }
                catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };

        auto workers = std::min(threads == 0 ? std::size_t{1} : threads, count);
        if (workers <= 1)
            work();
        else {
            std::vector<std::thread> pool;
            for (std::size_t w = 0; w < workers; ++w)
                pool.emplace_back(work);
            for (auto & t : pool)
                t.join();
        }

        for (auto & e : errors)
            if (e)
                std::rethrow_exception(e);

        std::vector<Result> results;
        results.reserve(count);
        for (auto & s : slots)
            results.push_back(std::move(*s));
        return results;
    }
}

#endif

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace arp::detail {

/// Runs job(i) for i in [0, count) on up to `workers` threads and returns the
/// results indexed by i, so merging in index order is independent of the
/// schedule. The first exception thrown by any job is rethrown after all
/// threads have joined; `cancel` is raised so other jobs can stop early.
template <class Result, class Job>
std::vector<Result> run_indexed(std::size_t count, unsigned workers, std::atomic<bool> &cancel, Job &&job) {
    std::vector<Result> results(count);
    const std::size_t threads = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = job(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || cancel.load()) return;
            try {
                results[i] = job(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                cancel.store(true);
                return;
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    return results;
}

} // namespace arp::detail

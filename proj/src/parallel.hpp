#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace armload::detail {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, n). Work is handed out in fixed-size chunks so that
// any per-chunk accumulation done by the caller is independent of the worker
// count. Exceptions from workers are rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn, std::size_t chunk_size = 64) {
    jobs = resolve_jobs(jobs);
    if (n == 0) return;
    if (jobs == 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t num_chunks = (n + chunk_size - 1) / chunk_size;
    std::atomic<std::size_t> next_chunk{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};

    auto worker = [&] {
        for (;;) {
            const std::size_t c = next_chunk.fetch_add(1);
            if (c >= num_chunks || failed.load(std::memory_order_relaxed)) return;
            const std::size_t begin = c * chunk_size;
            const std::size_t end = std::min(begin + chunk_size, n);
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> threads;
    const int nthreads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), num_chunks));
    threads.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

// Runs fn(chunk_index, begin, end) over fixed chunks of [0, n). The caller
// combines per-chunk partials in chunk order, giving reductions a fixed
// floating-point evaluation order regardless of how many workers ran.
template <typename Fn>
void parallel_chunks(std::size_t n, int jobs, std::size_t chunk_size, Fn&& fn) {
    if (n == 0) return;
    const std::size_t num_chunks = (n + chunk_size - 1) / chunk_size;
    parallel_for(
        num_chunks, jobs,
        [&](std::size_t c) {
            const std::size_t begin = c * chunk_size;
            const std::size_t end = std::min(begin + chunk_size, n);
            fn(c, begin, end);
        },
        1);
}

}  // namespace armload::detail

#ifndef LOGDPP_PARALLEL_HPP
#define LOGDPP_PARALLEL_HPP

// Deterministic parallel helpers: a worker count honoring LOGDPP_THREADS,
// an index-space map that stores each result at its own slot, and a
// pairwise tree reduction so sums are bit-identical regardless of the
// number of workers.

#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace logdpp::parallel {

inline std::size_t thread_count() {
    if (const char* env = std::getenv("LOGDPP_THREADS")) {
        const long v = std::atol(env);
        if (v >= 1)
            return std::size_t(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Evaluates fn(i) for i in [0, count) and returns the results in order.
// Work is split into contiguous blocks, one per worker.
template <class Fn>
std::vector<double> map_indexed(std::size_t count, Fn&& fn) {
    std::vector<double> out(count);
    const std::size_t workers = std::min(thread_count(), std::max<std::size_t>(count, 1));
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t block = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * block;
        const std::size_t hi = std::min(count, lo + block);
        if (lo >= hi)
            break;
        pool.emplace_back([&out, &fn, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i)
                out[i] = fn(i);
        });
    }
    for (auto& t : pool)
        t.join();
    return out;
}

// Fixed-order pairwise tree reduction; independent of thread count.
inline double pairwise_sum(const std::vector<double>& v) {
    if (v.empty())
        return 0.0;
    std::vector<double> level(v);
    while (level.size() > 1) {
        std::vector<double> next((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2)
            next[i / 2] = level[i] + level[i + 1];
        if (level.size() % 2 == 1)
            next.back() = level.back();
        level.swap(next);
    }
    return level[0];
}

} // namespace logdpp::parallel

#endif

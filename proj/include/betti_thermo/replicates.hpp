/**
 * Independent Monte Carlo replicates.
 *
 * Replicate i always runs on `rng.derive(i)` and its result lands in slot i;
 * the reduction happens afterwards in index order.  Output is therefore
 * identical for any worker count.
 */
#ifndef BETTI_THERMO_REPLICATES_HPP
#define BETTI_THERMO_REPLICATES_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <span>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <vector>

#include "rng.hpp"

namespace bthermo {

template <typename Fn>
auto run_replicates(std::size_t reps, const RngStream& rng, unsigned workers, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, RngStream, std::size_t>>
{
    using Result = std::invoke_result_t<Fn&, RngStream, std::size_t>;
    std::vector<Result> out(reps);
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(reps, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < reps; ++i)
            out[i] = fn(rng.derive(i), i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= reps)
                return;
            try {
                out[i] = fn(rng.derive(i), i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(reps);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

struct SampleSummary
{
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t count = 0;
};

/// Mean and standard error (sample sd / sqrt(n)), summed in index order.
inline SampleSummary summarize(std::span<const double> xs)
{
    SampleSummary s;
    s.count = xs.size();
    if (xs.empty())
        return s;
    double sum = 0.0;
    for (double x : xs)
        sum += x;
    s.mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2)
        return s;
    double ss = 0.0;
    for (double x : xs)
        ss += (x - s.mean) * (x - s.mean);
    s.std_error = std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
    return s;
}

}  // namespace bthermo

#endif

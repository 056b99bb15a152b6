/**
 * Reproducible random streams.
 *
 * A stream is identified by (master_seed, stream_index).  The pair is hashed
 * into a 64-bit key and the stream then emits SplitMix64 outputs of a
 * counter started at that key, so any stream can be reconstructed without
 * replaying its siblings.  Replicate r of an experiment uses
 * `stream.derive(r)`, which keeps results independent of worker count.
 */
#ifndef BETTI_THERMO_RNG_HPP
#define BETTI_THERMO_RNG_HPP

#include <cstdint>
#include <limits>

#include <boost/random/poisson_distribution.hpp>

namespace bthermo {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

/// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// For a fixed master seed this is injective in the index: the index is
/// multiplied by an odd constant (a bijection mod 2^64) before a bijective mix.
constexpr std::uint64_t stream_key(std::uint64_t master, std::uint64_t index) noexcept
{
    return mix64(mix64(master) + index * kGolden + 0x632be59bd9b4e019ULL);
}

}  // namespace detail

class RngStream
{
  public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t master_seed, std::uint64_t stream_index = 0) noexcept
        : master_seed_(master_seed), stream_index_(stream_index),
          state_(detail::stream_key(master_seed, stream_index))
    {
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept
    {
        state_ += detail::kGolden;
        return detail::mix64(state_);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).  Clamped so rounding never yields hi itself.
    double uniform(double lo, double hi) noexcept
    {
        const double x = lo + (hi - lo) * uniform();
        return x < hi ? x : lo;
    }

    std::uint64_t poisson(double mean)
    {
        if (!(mean > 0.0))
            return 0;
        boost::random::poisson_distribution<std::uint64_t, double> dist(mean);
        return dist(*this);
    }

    /// Child stream, deterministic in (this stream's identity, index).  The
    /// parent's consumption state does not matter.
    RngStream derive(std::uint64_t index) const noexcept
    {
        return RngStream(detail::stream_key(master_seed_, stream_index_), index);
    }

    std::uint64_t master_seed() const noexcept { return master_seed_; }
    std::uint64_t stream_index() const noexcept { return stream_index_; }

  private:
    std::uint64_t master_seed_;
    std::uint64_t stream_index_;
    std::uint64_t state_;
};

}  // namespace bthermo

#endif

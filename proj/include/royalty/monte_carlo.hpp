#pragma once

// Plain Monte Carlo channel for the royalty distribution.
//
// Generator: xoshiro256** 1.0 (Blackman & Vigna), state initialized from the
// 64-bit seed with four SplitMix64 outputs. Draws are split into fixed-size
// shards; shard k uses the base state advanced by k calls of jump() (2^128
// steps each), so the sample sequence depends only on (seed, n) and never on
// the thread count. Uniform doubles take the top 53 bits: (x >> 11) * 2^-53.

#include "royalty/posterior.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace royalty {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
    std::uint64_t next() noexcept;

private:
    std::uint64_t state_;
};

class Xoshiro256StarStar {
public:
    using result_type = std::uint64_t;
    using State = std::array<std::uint64_t, 4>;

    explicit Xoshiro256StarStar(std::uint64_t seed) noexcept;
    explicit Xoshiro256StarStar(const State& state) noexcept : s_(state) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    result_type operator()() noexcept;
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
    /// Advances the state by 2^128 draws.
    void jump() noexcept;

    const State& state() const noexcept { return s_; }

private:
    State s_;
};

inline constexpr std::size_t kShardSize = std::size_t{1} << 16;
inline constexpr std::size_t kDefaultBinCount = 201;
inline constexpr std::size_t kDefaultMcSamples = 1'000'000;

/// theta at n i.i.d. uniform payoff draws. Case 2 draws landing exactly on
/// (0,0) are redrawn.
std::vector<double> sample_thetas(const RoyaltySurface& surface, const PayoffBounds& bounds,
                                  std::size_t n, std::uint64_t seed, unsigned threads = 1);

struct SampleSummary {
    std::size_t n = 0;
    double mean = 0.0;
    double std_error_of_mean = 0.0;
    std::map<double, double> quantiles;
    double histogram_mode = 0.0;
    std::size_t bin_count = kDefaultBinCount;
    std::uint64_t seed = 0;
};

/// Mean, standard error s / sqrt(n), linearly interpolated quantiles and the
/// midpoint of the densest of `bin_count` equal bins on [0,1]. `seed` is
/// recorded as given.
SampleSummary summarize(std::span<const double> samples, std::span<const double> quantile_probs,
                        std::size_t bin_count = kDefaultBinCount, std::uint64_t seed = 0);

/// Fraction of samples <= t.
double empirical_cdf(std::span<const double> samples, double t);

}  // namespace royalty

#include "royalty/monte_carlo.hpp"

#include "royalty/detail/parallel.hpp"
#include "royalty/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/format.h>

namespace royalty {

std::uint64_t SplitMix64::next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) noexcept {
    SplitMix64 mixer(seed);
    for (auto& word : s_) word = mixer.next();
}

Xoshiro256StarStar::result_type Xoshiro256StarStar::operator()() noexcept {
    const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
}

void Xoshiro256StarStar::jump() noexcept {
    static constexpr std::uint64_t kJump[] = {0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL,
                                              0xa9582618e03fc9aaULL, 0x39abdc4529b1661cULL};
    State acc{};
    for (std::uint64_t word : kJump) {
        for (int bit = 0; bit < 64; ++bit) {
            if (word & (std::uint64_t{1} << bit)) {
                for (std::size_t k = 0; k < acc.size(); ++k) acc[k] ^= s_[k];
            }
            (*this)();
        }
    }
    s_ = acc;
}

std::vector<double> sample_thetas(const RoyaltySurface& surface, const PayoffBounds& bounds,
                                  std::size_t n, std::uint64_t seed, unsigned threads) {
    if (n == 0) {
        throw RoyaltyError(ErrorKind::InvalidArgument, "sample count must be at least 1");
    }
    // Raises DegeneratePayoffs for Case 2 at the all-zero rectangle.
    theta_support(surface, bounds);

    const std::size_t shards = (n + kShardSize - 1) / kShardSize;
    std::vector<Xoshiro256StarStar> streams;
    streams.reserve(shards);
    Xoshiro256StarStar base(seed);
    for (std::size_t k = 0; k < shards; ++k) {
        streams.push_back(base);
        base.jump();
    }

    const double a = bounds.a();
    const double c = bounds.c();
    const double w1 = bounds.width1();
    const double w2 = bounds.width2();
    const bool guard_origin = surface.singular_at_origin();

    std::vector<double> out(n);
    detail::parallel_for(shards, threads, [&](std::size_t k) {
        Xoshiro256StarStar& rng = streams[k];
        const std::size_t begin = k * kShardSize;
        const std::size_t end = std::min(n, begin + kShardSize);
        for (std::size_t i = begin; i < end; ++i) {
            double d1 = 0.0;
            double d2 = 0.0;
            do {
                d1 = a + w1 * rng.uniform();
                d2 = c + w2 * rng.uniform();
            } while (guard_origin && d1 == 0.0 && d2 == 0.0);
            out[i] = surface(d1, d2);
        }
    });
    return out;
}

SampleSummary summarize(std::span<const double> samples, std::span<const double> quantile_probs,
                        std::size_t bin_count, std::uint64_t seed) {
    if (samples.empty()) {
        throw RoyaltyError(ErrorKind::EmptySample, "cannot summarize an empty sample");
    }
    if (bin_count < 10) {
        throw RoyaltyError(ErrorKind::InvalidArgument,
                           fmt::format("bin_count = {} must be at least 10", bin_count));
    }
    for (double p : quantile_probs) {
        if (!(p > 0.0 && p < 1.0)) {
            throw RoyaltyError(ErrorKind::InvalidArgument,
                               fmt::format("quantile probability {} must lie in (0, 1)", p));
        }
    }

    SampleSummary summary;
    summary.n = samples.size();
    summary.bin_count = bin_count;
    summary.seed = seed;

    double sum = 0.0;
    for (double x : samples) sum += x;
    const double n = static_cast<double>(samples.size());
    summary.mean = sum / n;
    if (samples.size() > 1) {
        double squares = 0.0;
        for (double x : samples) squares += (x - summary.mean) * (x - summary.mean);
        summary.std_error_of_mean = std::sqrt(squares / (n - 1.0)) / std::sqrt(n);
    }

    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    // Keeps the mean inside the sample range despite summation rounding.
    summary.mean = std::clamp(summary.mean, sorted.front(), sorted.back());
    for (double p : quantile_probs) {
        const double h = (n - 1.0) * p;
        const auto lo = static_cast<std::size_t>(std::floor(h));
        const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
        summary.quantiles[p] = sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
    }

    std::vector<std::size_t> counts(bin_count, 0);
    for (double x : samples) {
        const double scaled = std::clamp(x, 0.0, 1.0) * static_cast<double>(bin_count);
        counts[std::min(static_cast<std::size_t>(scaled), bin_count - 1)]++;
    }
    const auto densest = static_cast<std::size_t>(
        std::distance(counts.begin(), std::max_element(counts.begin(), counts.end())));
    summary.histogram_mode = (static_cast<double>(densest) + 0.5) / static_cast<double>(bin_count);
    return summary;
}

double empirical_cdf(std::span<const double> samples, double t) {
    if (samples.empty()) {
        throw RoyaltyError(ErrorKind::EmptySample, "empirical CDF of an empty sample");
    }
    const auto below = std::count_if(samples.begin(), samples.end(), [t](double x) { return x <= t; });
    return static_cast<double>(below) / static_cast<double>(samples.size());
}

}  // namespace royalty

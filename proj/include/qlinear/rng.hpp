#ifndef QLINEAR_RNG_HPP
#define QLINEAR_RNG_HPP

#include <cstdint>
#include <vector>

namespace qlinear {

/**
 * SplitMix64, used as a counter-based generator: the i-th output is a fixed
 * mix of seed + i * golden-gamma. Pure 64-bit integer arithmetic, so streams
 * are bit-identical on every platform. Two independent streams never share
 * state; derive sub-streams with derive().
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, bound) by masked rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> __builtin_clzll(bound - 1 | 1);
        for (;;) {
            std::uint64_t v = next() & mask;
            if (v < bound) return v;
        }
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t position() const { return counter_; }

    // Deterministic sub-stream (e.g. the estimator stream of a run).
    SplitMix64 derive(std::uint64_t salt) const {
        SplitMix64 child(seed_ ^ (0xD1B54A32D192ED03ULL * (salt + 1)));
        return child;
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

// Uniform random k-subset of [1..n] by Floyd's algorithm, emitted sorted.
// Every k-subset has probability 1 / C(n,k); O(k) draws.
void sample_subset_floyd(SplitMix64& rng, int n, int k, std::vector<int>& out);

}  // namespace qlinear

#endif

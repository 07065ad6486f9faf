#ifndef QLINEAR_PAIR_COVERAGE_HPP
#define QLINEAR_PAIR_COVERAGE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qlinear/combinatorics.hpp"

namespace qlinear {

/**
 * Symmetric covered/uncovered state over all unordered vertex pairs of [1..n],
 * stored as a flat triangular bit array. This is the only mutable core state
 * of a run: a pair is covered once some edge contains both endpoints.
 */
class PairCoverage {
public:
    explicit PairCoverage(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("PairCoverage: vertex count must be positive");
        std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
        bits_.assign(static_cast<std::size_t>((pairs + 63) / 64), 0);
    }

    int vertex_count() const { return n_; }

    std::int64_t pair_count() const { return static_cast<std::int64_t>(n_) * (n_ - 1) / 2; }

    // u, v are 1-based labels.
    bool covered(int u, int v) const {
        std::int64_t idx = pair_index(u - 1, v - 1);
        return (bits_[static_cast<std::size_t>(idx >> 6)] >> (idx & 63)) & 1u;
    }

    // Marks {u, v} covered; the pair must currently be uncovered.
    void mark_covered(int u, int v) {
        std::int64_t idx = pair_index(u - 1, v - 1);
        std::uint64_t& word = bits_[static_cast<std::size_t>(idx >> 6)];
        std::uint64_t bit = std::uint64_t{1} << (idx & 63);
        if (word & bit) throw std::logic_error("PairCoverage: pair already covered");
        word |= bit;
        ++covered_count_;
    }

    std::int64_t covered_count() const { return covered_count_; }

private:
    int n_;
    std::vector<std::uint64_t> bits_;
    std::int64_t covered_count_ = 0;
};

}  // namespace qlinear

#endif

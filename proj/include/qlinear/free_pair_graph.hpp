#ifndef QLINEAR_FREE_PAIR_GRAPH_HPP
#define QLINEAR_FREE_PAIR_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qlinear {

/**
 * Graph on [1..n] whose edges are the uncovered pairs (the complement of
 * PairCoverage). Adjacency is kept as one bit row per vertex so that
 * triangle and clique queries reduce to word-wide intersections.
 * Maximality of the hypergraph is equivalent to this graph being K_q-free.
 */
class FreePairGraph {
public:
    explicit FreePairGraph(int n)
        : n_(n), words_(static_cast<int>((n + 63) / 64)),
          rows_(static_cast<std::size_t>(n) * words_, 0),
          edge_count_(static_cast<std::int64_t>(n) * (n - 1) / 2) {
        if (n < 1) throw std::invalid_argument("FreePairGraph: vertex count must be positive");
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (v != u) set_bit(u, v);
            }
        }
    }

    int vertex_count() const { return n_; }
    int words_per_row() const { return words_; }
    std::int64_t edge_count() const { return edge_count_; }

    // u, v are 1-based labels.
    bool adjacent(int u, int v) const { return test_bit(u - 1, v - 1); }

    void remove_edge(int u, int v) {
        if (!test_bit(u - 1, v - 1)) throw std::logic_error("FreePairGraph: edge already removed");
        clear_bit(u - 1, v - 1);
        clear_bit(v - 1, u - 1);
        --edge_count_;
    }

    // Bit row of 0-based vertex u (bit v set iff pair {u+1, v+1} is free).
    const std::uint64_t* row(int u) const { return rows_.data() + static_cast<std::size_t>(u) * words_; }

    std::int64_t degree(int u) const {
        const std::uint64_t* r = row(u);
        std::int64_t d = 0;
        for (int w = 0; w < words_; ++w) d += __builtin_popcountll(r[w]);
        return d;
    }

private:
    void set_bit(int u, int v) {
        rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    }
    void clear_bit(int u, int v) {
        rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    }
    bool test_bit(int u, int v) const {
        return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> rows_;
    std::int64_t edge_count_;
};

}  // namespace qlinear

#endif

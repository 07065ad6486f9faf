#ifndef QLINEAR_LINEAR_HYPERGRAPH_HPP
#define QLINEAR_LINEAR_HYPERGRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qlinear/free_pair_graph.hpp"
#include "qlinear/pair_coverage.hpp"

namespace qlinear {

/**
 * Ordered q-uniform linear hypergraph on [1..n]. Every pair of vertices lies
 * in at most one edge; coverage and the free-pair graph are kept consistent
 * with the edge list at all times. Vertex labels are 1-based everywhere in
 * the public interface; only the underlying bit arrays index from 0.
 */
class LinearHypergraph {
public:
    LinearHypergraph(int n, int q);

    int n() const { return n_; }
    int q() const { return q_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()) / q_; }

    // i-th edge (0-based insertion order), sorted 1-based labels.
    std::span<const int> edge(std::int64_t i) const {
        return {edges_.data() + i * q_, static_cast<std::size_t>(q_)};
    }

    const PairCoverage& coverage() const { return coverage_; }
    const FreePairGraph& free_pairs() const { return free_; }

    // True iff every pair inside e is uncovered. Validates e (q distinct
    // labels in [1..n]) and throws std::invalid_argument otherwise.
    bool is_available(std::span<const int> e) const;

    // As is_available but without input validation; e must be sorted.
    bool is_available_unchecked(std::span<const int> e) const;

    // Appends e. Throws std::invalid_argument on malformed input and
    // std::logic_error if e is not available (never accepted silently).
    void add_edge(std::span<const int> e);

    bool is_available(std::initializer_list<int> e) const {
        return is_available(std::span<const int>(e.begin(), e.size()));
    }
    void add_edge(std::initializer_list<int> e) { add_edge(std::span<const int>(e.begin(), e.size())); }

private:
    void validate(std::span<const int> e, std::vector<int>& sorted) const;

    int n_;
    int q_;
    std::vector<int> edges_;  // flat, stride q, each edge sorted
    PairCoverage coverage_;
    FreePairGraph free_;
};

}  // namespace qlinear

#endif

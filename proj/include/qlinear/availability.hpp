#ifndef QLINEAR_AVAILABILITY_HPP
#define QLINEAR_AVAILABILITY_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qlinear/linear_hypergraph.hpp"

namespace qlinear {

// Raised when an exact enumeration or clique search would exceed its budget.
// Callers fall back to Monte Carlo estimates (see estimate_available).
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerationBudget {
    std::int64_t max_candidates = 20'000'000;   // cap on C(n,q) for exact enumeration
    std::int64_t max_clique_nodes = 50'000'000; // cap on clique-search nodes
};

// Exact |H(i)|: number of q-sets whose internal pairs are all uncovered.
// q = 3 runs on the triangle kernel regardless of C(n,3); other q enumerate
// all C(n,q) candidates and throw budget_error past the budget.
// The parallel version is the default; the serial one is the reference
// implementation the tests compare against.
std::int64_t count_available(const LinearHypergraph& h, const EnumerationBudget& budget = {});
std::int64_t count_available_serial(const LinearHypergraph& h, const EnumerationBudget& budget = {});

// Triangle count of the free-pair graph (= |H(i)| for q = 3).
std::int64_t count_triangles(const FreePairGraph& g);
std::int64_t count_triangles_serial(const FreePairGraph& g);

// Lists H(i) into out as a flat array (stride q, each q-set sorted, 1-based,
// lexicographic order). Returns the count. Deterministic order; serial.
std::int64_t enumerate_available(const LinearHypergraph& h, std::vector<int>& out,
                                 const EnumerationBudget& budget = {});

// True iff the free-pair graph restricted to `candidates` (1-based labels)
// contains a clique of size k. Exact branch-and-bound with a node budget.
bool free_graph_has_clique(const FreePairGraph& g, int k, std::span<const int> candidates,
                           std::int64_t node_budget);

// True iff no edge can be added (free-pair graph is K_q-free); equivalent to
// count_available == 0. Throws budget_error if the clique search exceeds its
// node budget.
bool is_maximal(const LinearHypergraph& h, const EnumerationBudget& budget = {});

}  // namespace qlinear

#endif

#include "qlinear/linear_hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlinear {

LinearHypergraph::LinearHypergraph(int n, int q)
    : n_(n), q_(q), coverage_(n), free_(n) {
    if (q < 2 || q > n) throw std::invalid_argument("LinearHypergraph: require 2 <= q <= n");
}

void LinearHypergraph::validate(std::span<const int> e, std::vector<int>& sorted) const {
    if (static_cast<int>(e.size()) != q_)
        throw std::invalid_argument("edge must have exactly q vertices");
    sorted.assign(e.begin(), e.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1 || sorted[i] > n_)
            throw std::invalid_argument("vertex label out of range [1..n]");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("edge vertices must be distinct");
    }
}

bool LinearHypergraph::is_available_unchecked(std::span<const int> e) const {
    const int k = static_cast<int>(e.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (coverage_.covered(e[i], e[j])) return false;
    return true;
}

bool LinearHypergraph::is_available(std::span<const int> e) const {
    std::vector<int> sorted;
    validate(e, sorted);
    return is_available_unchecked(sorted);
}

void LinearHypergraph::add_edge(std::span<const int> e) {
    std::vector<int> sorted;
    validate(e, sorted);
    if (!is_available_unchecked(sorted))
        throw std::logic_error("add_edge: edge is not available (pair already covered)");
    for (int i = 0; i < q_; ++i) {
        for (int j = i + 1; j < q_; ++j) {
            coverage_.mark_covered(sorted[i], sorted[j]);
            free_.remove_edge(sorted[i], sorted[j]);
        }
    }
    edges_.insert(edges_.end(), sorted.begin(), sorted.end());
}

}  // namespace qlinear

#include "qlinear/availability.hpp"

#include <algorithm>

#include "qlinear/combinatorics.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qlinear {

namespace {

// Popcount of (a & b) restricted to bit positions > v.
std::int64_t intersect_above(const std::uint64_t* a, const std::uint64_t* b, int words, int v) {
    int w0 = (v + 1) >> 6;
    if (w0 >= words) return 0;
    std::int64_t c = 0;
    std::uint64_t first = (a[w0] & b[w0]) & (~std::uint64_t{0} << ((v + 1) & 63));
    c += __builtin_popcountll(first);
    for (int w = w0 + 1; w < words; ++w) c += __builtin_popcountll(a[w] & b[w]);
    return c;
}

std::int64_t triangles_from_vertex(const FreePairGraph& g, int u) {
    const int n = g.vertex_count();
    const int words = g.words_per_row();
    const std::uint64_t* ru = g.row(u);
    std::int64_t c = 0;
    for (int v = u + 1; v < n; ++v) {
        if ((ru[v >> 6] >> (v & 63)) & 1u)
            c += intersect_above(ru, g.row(v), words, v);
    }
    return c;
}

std::int64_t count_combinations(const LinearHypergraph& h, std::int64_t lo, std::int64_t hi) {
    const int n = h.n();
    const int q = h.q();
    std::vector<int> c;
    unrank_combination(lo, n, q, c);
    std::int64_t count = 0;
    for (std::int64_t r = lo; r < hi; ++r) {
        if (h.is_available_unchecked(c)) ++count;
        if (r + 1 < hi) next_combination(c, n);
    }
    return count;
}

}  // namespace

std::int64_t count_triangles_serial(const FreePairGraph& g) {
    std::int64_t total = 0;
    for (int u = 0; u < g.vertex_count(); ++u) total += triangles_from_vertex(g, u);
    return total;
}

std::int64_t count_triangles(const FreePairGraph& g) {
    const int n = g.vertex_count();
    std::int64_t total = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
    for (int u = 0; u < n; ++u) total += triangles_from_vertex(g, u);
    return total;
}

std::int64_t count_available_serial(const LinearHypergraph& h, const EnumerationBudget& budget) {
    if (h.q() == 3) return count_triangles_serial(h.free_pairs());
    std::int64_t total = binom_exact(h.n(), h.q());
    if (total < 0 || total > budget.max_candidates)
        throw budget_error("count_available: C(n,q) exceeds enumeration budget");
    return count_combinations(h, 0, total);
}

std::int64_t count_available(const LinearHypergraph& h, const EnumerationBudget& budget) {
    if (h.q() == 3) return count_triangles(h.free_pairs());
    std::int64_t total = binom_exact(h.n(), h.q());
    if (total < 0 || total > budget.max_candidates)
        throw budget_error("count_available: C(n,q) exceeds enumeration budget");
    std::int64_t count = 0;
#ifdef _OPENMP
    int chunks = std::min<std::int64_t>(total, omp_get_max_threads());
#else
    int chunks = 1;
#endif
    if (chunks <= 1) return count_combinations(h, 0, total);
#pragma omp parallel for reduction(+ : count)
    for (int c = 0; c < chunks; ++c) {
        std::int64_t lo = total * c / chunks;
        std::int64_t hi = total * (c + 1) / chunks;
        count += count_combinations(h, lo, hi);
    }
    return count;
}

std::int64_t enumerate_available(const LinearHypergraph& h, std::vector<int>& out,
                                 const EnumerationBudget& budget) {
    out.clear();
    const int n = h.n();
    const int q = h.q();
    if (q == 3) {
        // Triangle listing on the free-pair graph; lex order over (u, v, w).
        const FreePairGraph& g = h.free_pairs();
        const int words = g.words_per_row();
        for (int u = 0; u < n; ++u) {
            const std::uint64_t* ru = g.row(u);
            for (int v = u + 1; v < n; ++v) {
                if (!((ru[v >> 6] >> (v & 63)) & 1u)) continue;
                const std::uint64_t* rv = g.row(v);
                int w0 = (v + 1) >> 6;
                for (int w = w0; w < words; ++w) {
                    std::uint64_t bits = ru[w] & rv[w];
                    if (w == w0) bits &= ~std::uint64_t{0} << ((v + 1) & 63);
                    while (bits) {
                        int b = __builtin_ctzll(bits);
                        bits &= bits - 1;
                        out.push_back(u + 1);
                        out.push_back(v + 1);
                        out.push_back((w << 6) + b + 1);
                    }
                }
            }
        }
        return static_cast<std::int64_t>(out.size()) / 3;
    }
    std::int64_t total = binom_exact(n, q);
    if (total < 0 || total > budget.max_candidates)
        throw budget_error("enumerate_available: C(n,q) exceeds enumeration budget");
    std::vector<int> c;
    first_combination(c, q);
    for (std::int64_t r = 0; r < total; ++r) {
        if (h.is_available_unchecked(c)) out.insert(out.end(), c.begin(), c.end());
        if (r + 1 < total) next_combination(c, n);
    }
    return static_cast<std::int64_t>(out.size()) / q;
}

namespace {

struct CliqueSearch {
    const FreePairGraph& g;
    int words;
    std::int64_t nodes_left;

    bool extend(std::vector<std::uint64_t>& cand, int need) {
        if (need == 0) return true;
        if (--nodes_left < 0) throw budget_error("clique search exceeded node budget");
        std::int64_t avail = 0;
        for (int w = 0; w < words; ++w) avail += __builtin_popcountll(cand[w]);
        if (avail < need) return false;
        std::vector<std::uint64_t> next(static_cast<std::size_t>(words));
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                int v = (w << 6) + b;
                const std::uint64_t* rv = g.row(v);
                // Restrict to candidates after v; keeps enumeration canonical.
                for (int x = 0; x < words; ++x) next[x] = cand[x] & rv[x];
                next[w] &= ~std::uint64_t{0} << b;
                next[w] &= ~(std::uint64_t{1} << b);
                for (int x = 0; x < w; ++x) next[x] = 0;
                if (extend(next, need - 1)) return true;
                if (--avail < need) return false;
                cand[w] &= ~(std::uint64_t{1} << b);
            }
        }
        return false;
    }
};

}  // namespace

bool free_graph_has_clique(const FreePairGraph& g, int k, std::span<const int> candidates,
                           std::int64_t node_budget) {
    if (k <= 0) return true;
    const int words = g.words_per_row();
    std::vector<std::uint64_t> cand(static_cast<std::size_t>(words), 0);
    for (int label : candidates) {
        int v = label - 1;
        cand[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    if (k == 1) {
        for (auto w : cand)
            if (w) return true;
        return false;
    }
    CliqueSearch search{g, words, node_budget};
    return search.extend(cand, k);
}

bool is_maximal(const LinearHypergraph& h, const EnumerationBudget& budget) {
    const int n = h.n();
    const int q = h.q();
    const FreePairGraph& g = h.free_pairs();
    if (q == 2) return g.edge_count() == 0;
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    return !free_graph_has_clique(g, q, all, budget.max_clique_nodes);
}

}  // namespace qlinear

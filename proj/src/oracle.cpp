#include "qlinear/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "qlinear/combinatorics.hpp"

namespace qlinear {

namespace {

int popcount(std::uint32_t m) { return __builtin_popcount(m); }

void validate_tracked(const LinearHypergraph& h, std::span<const int> J) {
    if (static_cast<int>(J.size()) >= h.q())
        throw std::invalid_argument("expected_delta: require |J| < q");
    for (int v : J)
        if (v < 1 || v > h.n()) throw std::invalid_argument("expected_delta: label out of range");
}

}  // namespace

DeltaOracle::DeltaOracle(const LinearHypergraph& h, const EnumerationBudget& budget)
    : n_(h.n()), q_(h.q()) {
    if (n_ > 20) throw budget_error("DeltaOracle: mask tables require n <= 20");
    std::vector<int> listing;
    enumerate_available(h, listing, budget);
    containing_.assign(std::size_t{1} << n_, 0);
    const std::int64_t count = static_cast<std::int64_t>(listing.size()) / q_;
    avail_masks_.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        std::uint32_t em = 0;
        for (int p = 0; p < q_; ++p) em |= std::uint32_t{1} << (listing[i * q_ + p] - 1);
        avail_masks_.push_back(em);
        // every subset of E of size >= 2 gains one containing available edge
        for (std::uint32_t sub = em; sub != 0; sub = (sub - 1) & em) {
            if (popcount(sub) >= 2) ++containing_[sub];
        }
    }
}

std::uint32_t DeltaOracle::mask_of(std::span<const int> J) const {
    std::uint32_t m = 0;
    for (int v : J) m |= std::uint32_t{1} << (v - 1);
    return m;
}

Rational DeltaOracle::formula(std::span<const int> J) const {
    if (avail_masks_.empty())
        throw std::domain_error("expected_delta: undefined when |H| = 0");
    const std::uint32_t jm = mask_of(J);
    std::int64_t total = 0;
    for (std::uint32_t em : avail_masks_) {
        if ((em & jm) != jm) continue;      // K ranges over Y_J: E = J u K
        const std::uint32_t km = em & ~jm;
        // S subset of J (possibly empty), T nonempty subset of K, |S|+|T| >= 2
        std::uint32_t sm = jm;
        for (;;) {  // iterate all submasks of jm, including 0
            const int s = popcount(sm);
            for (std::uint32_t tm = km; tm != 0; tm = (tm - 1) & km) {
                const int t = popcount(tm);
                if (s + t < 2) continue;
                const std::int64_t y = containing_[sm | tm];
                const std::int64_t term = static_cast<std::int64_t>(s + t - 1) * y;
                total += ((s + t) & 1) ? -term : term;
            }
            if (sm == 0) break;
            sm = (sm - 1) & jm;
        }
    }
    return -Rational(total, static_cast<std::int64_t>(avail_masks_.size()));
}

Rational DeltaOracle::bruteforce(std::span<const int> J) const {
    if (avail_masks_.empty())
        throw std::domain_error("expected_delta: undefined when |H| = 0");
    const std::uint32_t jm = mask_of(J);
    std::int64_t total = 0;
    for (std::uint32_t em : avail_masks_) {
        if (popcount(em & jm) >= 2) continue;  // e freezes J: change is 0
        // recount: extensions of J that e makes unavailable
        std::int64_t removed = 0;
        for (std::uint32_t other : avail_masks_) {
            if ((other & jm) == jm && popcount(other & em) >= 2) ++removed;
        }
        total -= removed;
    }
    return Rational(total, static_cast<std::int64_t>(avail_masks_.size()));
}

Rational expected_delta_formula(const LinearHypergraph& h, std::span<const int> J,
                                const EnumerationBudget& budget) {
    validate_tracked(h, J);
    return DeltaOracle(h, budget).formula(J);
}

Rational expected_delta_bruteforce(const LinearHypergraph& h, std::span<const int> J,
                                   const EnumerationBudget& budget) {
    validate_tracked(h, J);
    return DeltaOracle(h, budget).bruteforce(J);
}

DeltaReport delta_report(const LinearHypergraph& h, std::span<const int> J,
                         const EnumerationBudget& budget) {
    validate_tracked(h, J);
    DeltaOracle oracle(h, budget);
    DeltaReport rep;
    rep.J.assign(J.begin(), J.end());
    rep.formula_value = oracle.formula(J);
    rep.bruteforce_value = oracle.bruteforce(J);
    rep.match = rep.formula_value == rep.bruteforce_value;
    return rep;
}

BigInt identities(IdentityKind kind, int k, int ell) {
    if (ell < 1 || ell > 64 || k < 0 || k > 64)
        throw std::invalid_argument("identities: require 1 <= l <= 64 and 0 <= k <= 64");
    // terms reach C(64,32)^2 * 127, past any builtin integer; big-int rows
    auto pascal_row = [](int nn) {
        std::vector<BigInt> row(static_cast<std::size_t>(nn) + 1);
        row[0] = 1;
        for (int m = 1; m <= nn; ++m) row[m] = row[m - 1] * (nn - m + 1) / m;
        return row;
    };
    const std::vector<BigInt> ck = pascal_row(k);
    const std::vector<BigInt> cl = pascal_row(ell);

    BigInt total = 0;
    switch (kind) {
        case IdentityKind::A:
            for (int m = 2; m <= ell; ++m) {
                BigInt term = cl[m] * (m - 1);
                total += (m & 1) ? -term : term;
            }
            return total;
        case IdentityKind::B:
            for (int m = 2; m <= ell; ++m) {
                BigInt term = cl[m] * (m - 1);
                total += (m & 1) ? -term : term;
            }
            for (int m = 1; m <= ell; ++m) {
                BigInt term = cl[m] * m;
                total += (m & 1) ? term : -term;
            }
            return total;
        case IdentityKind::C:
            for (int m1 = 0; m1 <= k; ++m1) {
                for (int m2 = 1; m2 <= ell; ++m2) {
                    if (m1 + m2 < 2) continue;
                    BigInt term = ck[m1] * cl[m2] * (m1 + m2 - 1);
                    total += ((m1 + m2) & 1) ? -term : term;
                }
            }
            return total;
    }
    throw std::invalid_argument("identities: unknown kind");
}

bool absolute_bound_check(const LinearHypergraph& h, std::span<const int> J,
                          std::span<const int> e, const EnumerationBudget& budget) {
    const int q = h.q();
    const int j = static_cast<int>(J.size());
    if (!h.is_available(e)) throw std::invalid_argument("absolute_bound_check: e not available");

    std::int64_t overlap = 0;
    for (int v : e)
        if (std::find(J.begin(), J.end(), v) != J.end()) ++overlap;

    std::int64_t delta = 0;
    if (overlap < 2) {
        const std::int64_t before = exact_codegree(h, J, budget);
        LinearHypergraph next = h;
        next.add_edge(e);
        const std::int64_t after = exact_codegree(next, J, budget);
        delta = after - before;
    }
    const std::int64_t bound = (q - 1) * binom_exact(h.n() - j, q - j - 1);
    return std::abs(delta) <= bound;
}

PropositionReport proposition_bounds(int n, int q, const LinearHypergraph& final_state,
                                     bool maximal) {
    PropositionReport rep;
    rep.maximal = maximal;
    rep.edges = final_state.edge_count();

    const std::int64_t num = static_cast<std::int64_t>(n) * (n - q + 1);
    const std::int64_t den = static_cast<std::int64_t>(q) * (q - 1) * (q - 1);
    rep.turan_floor = (num + den - 1) / den;
    rep.turan_applicable = maximal;
    if (maximal) rep.turan_ok = rep.edges >= rep.turan_floor;

    rep.small_regime = static_cast<std::int64_t>(q) * q >= 2LL * n;
    if (rep.small_regime) {
        rep.size_ok = rep.edges < q;
        if (maximal) {
            rep.lower_ok = rep.edges * q > n - q;
            rep.upper_ok = rep.edges * q <= 2LL * n;
        }
    }
    rep.all_ok = rep.turan_ok && rep.size_ok && rep.lower_ok && rep.upper_ok;
    return rep;
}

PackingInstance build_packing_instance(int n, int q, const EnumerationBudget& budget) {
    if (n < 2 || q < 2 || q > n)
        throw std::invalid_argument("build_packing_instance: require 2 <= q <= n");
    PackingInstance inst;
    inst.n = n;
    inst.q = q;
    inst.nu = static_cast<std::int64_t>(n) * (n - 1) / 2;
    inst.k = q * (q - 1) / 2;
    inst.edge_count = binom_exact(n, q);
    if (inst.edge_count < 0 || inst.edge_count * inst.k > budget.max_candidates)
        throw budget_error("build_packing_instance: materialization budget exceeded");
    inst.edges.reserve(static_cast<std::size_t>(inst.edge_count * inst.k));
    std::vector<int> c;
    first_combination(c, q);
    for (std::int64_t r = 0; r < inst.edge_count; ++r) {
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j)
                inst.edges.push_back(static_cast<std::int32_t>(pair_index(c[i] - 1, c[j] - 1)));
        if (r + 1 < inst.edge_count) next_combination(c, n);
    }
    return inst;
}

bool packing_equivalence(int n, int q, std::span<const std::vector<int>> edge_sequence,
                         const EnumerationBudget& budget) {
    PackingInstance inst = build_packing_instance(n, q, budget);
    LinearHypergraph h(n, q);
    std::vector<bool> vertex_used(static_cast<std::size_t>(inst.nu), false);

    std::vector<int> c;
    auto models_agree = [&]() {
        first_combination(c, q);
        for (std::int64_t r = 0; r < inst.edge_count; ++r) {
            const bool avail_linear = h.is_available_unchecked(c);
            bool avail_packing = true;
            for (int i = 0; i < inst.k; ++i) {
                if (vertex_used[static_cast<std::size_t>(inst.edges[r * inst.k + i])]) {
                    avail_packing = false;
                    break;
                }
            }
            if (avail_linear != avail_packing) return false;
            if (r + 1 < inst.edge_count) next_combination(c, n);
        }
        return true;
    };

    if (!models_agree()) return false;
    for (const std::vector<int>& e : edge_sequence) {
        std::vector<int> sorted(e);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            for (std::size_t j = i + 1; j < sorted.size(); ++j)
                vertex_used[static_cast<std::size_t>(pair_index(sorted[i] - 1, sorted[j] - 1))] =
                    true;
        h.add_edge(sorted);
        if (!models_agree()) return false;
    }
    return true;
}

}  // namespace qlinear

#ifndef QLINEAR_ORACLE_HPP
#define QLINEAR_ORACLE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <vector>

#include "qlinear/availability.hpp"
#include "qlinear/linear_hypergraph.hpp"

namespace qlinear {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * Per-state brute-force ground truth for the expected one-step change of the
 * codegree variables. Built once per hypergraph state; both evaluation routes
 * then run off the same exact tables:
 *
 *   formula:    -(1/|H|) sum over K in Y_J of
 *               sum_{S subset J, T subset K, |S|+|T|>=2, |T|>=1}
 *                 (-1)^(|S|+|T|) (|S|+|T|-1) |Y_{S u T}|
 *               where |Y_A| for |A| = q is the availability indicator of A
 *               (the inclusion-exclusion needs that extension when S u T
 *               exhausts J u K).
 *
 *   bruteforce: average over every candidate next edge e in H of the direct
 *               recount |Y_J after e| - |Y_J|, with the freezing convention
 *               that an e meeting J in >= 2 vertices leaves Y_J unchanged.
 *
 * All arithmetic is exact; match means equality of rationals, not tolerance.
 */
class DeltaOracle {
public:
    // Requires n <= 20 and C(n,q) within the enumeration budget.
    explicit DeltaOracle(const LinearHypergraph& h, const EnumerationBudget& budget = {});

    std::int64_t available_count() const { return static_cast<std::int64_t>(avail_masks_.size()); }

    Rational formula(std::span<const int> J) const;
    Rational bruteforce(std::span<const int> J) const;

private:
    std::uint32_t mask_of(std::span<const int> J) const;

    int n_;
    int q_;
    std::vector<std::uint32_t> avail_masks_;   // bitmasks of the available q-sets
    std::vector<std::int32_t> containing_;     // containing_[mask] = #{E in H : mask subset E}
};

struct DeltaReport {
    std::vector<int> J;
    Rational formula_value;
    Rational bruteforce_value;
    bool match = false;
};

// Convenience single-shot forms; they build a DeltaOracle internally.
// Throw std::domain_error when |H| = 0 (the conditional change is undefined).
Rational expected_delta_formula(const LinearHypergraph& h, std::span<const int> J,
                                const EnumerationBudget& budget = {});
Rational expected_delta_bruteforce(const LinearHypergraph& h, std::span<const int> J,
                                   const EnumerationBudget& budget = {});
DeltaReport delta_report(const LinearHypergraph& h, std::span<const int> J,
                         const EnumerationBudget& budget = {});

/**
 * The finite inclusion-exclusion identities behind the one-step-change
 * counting argument, evaluated term by term in exact integer arithmetic:
 *   A: sum_{m=2..l} C(l,m) (-1)^m (m-1)                      = 1  (l >= 2)
 *   B: A-sum plus sum_{m=1..l} C(l,m) (-1)^(m+1) m           = 1
 *   C: sum_{0<=m1<=k, 1<=m2<=l, m1+m2>=2}
 *        C(k,m1) C(l,m2) (-1)^(m1+m2) (m1+m2-1)              = 0  (k >= 2)
 * k is ignored by kinds A and B (they are the k=0 and k=1 cases).
 */
enum class IdentityKind { A, B, C };

BigInt identities(IdentityKind kind, int k, int ell);

// Recomputes |Y_J| before and after adding the available edge e and checks
// the one-step ceiling |delta| <= (q-1) C(n-j, q-j-1).
bool absolute_bound_check(const LinearHypergraph& h, std::span<const int> J,
                          std::span<const int> e, const EnumerationBudget& budget = {});

/**
 * Size bounds for (maximal) linear hypergraphs:
 *   lower bound  e(H) >= ceil(n(n-q+1) / (q(q-1)^2))   for maximal H,
 *   small regime q^2 >= 2n: e(H) < q, and for maximal H additionally
 *                (n-q)/q < e(H) <= 2n/q.
 * Checks are exact integer comparisons.
 */
struct PropositionReport {
    bool maximal = false;
    std::int64_t edges = 0;
    std::int64_t turan_floor = 0;        // ceil(n(n-q+1)/(q(q-1)^2))
    bool turan_applicable = false;
    bool turan_ok = true;
    bool small_regime = false;           // q^2 >= 2n
    bool size_ok = true;                 // edges < q
    bool lower_ok = true;                // edges > (n-q)/q
    bool upper_ok = true;                // edges <= 2n/q
    bool all_ok = true;
};

PropositionReport proposition_bounds(int n, int q, const LinearHypergraph& final_state,
                                     bool maximal);

/**
 * The greedy-packing view of the process: one vertex per pair of [1..n]
 * (nu = C(n,2)), one edge of size k = C(q,2) per q-set. Choosing a q-set in
 * the linear process corresponds to choosing its pair-edge and deleting the
 * pair-vertices it uses.
 */
struct PackingInstance {
    int n = 0;
    int q = 0;
    std::int64_t nu = 0;                 // C(n,2) vertices
    int k = 0;                           // C(q,2), edge size
    std::int64_t edge_count = 0;         // C(n,q)
    std::vector<std::int32_t> edges;     // flat pair indices, stride k, lex order of q-sets
};

PackingInstance build_packing_instance(int n, int q, const EnumerationBudget& budget = {});

// Replays a q-linear run and confirms the per-step availability bijection
// between the two models (q-set available iff its pair-edge is untouched).
bool packing_equivalence(int n, int q, std::span<const std::vector<int>> edge_sequence,
                         const EnumerationBudget& budget = {});

}  // namespace qlinear

#endif

#ifndef QLINEAR_PROCESS_HPP
#define QLINEAR_PROCESS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qlinear/availability.hpp"
#include "qlinear/codegree.hpp"
#include "qlinear/linear_hypergraph.hpp"
#include "qlinear/rng.hpp"
#include "qlinear/trajectory.hpp"

namespace qlinear {

struct StopCondition {
    enum class Rule { Steps, M0, Maximal };
    Rule rule = Rule::Maximal;
    std::int64_t steps = 0;  // used by Rule::Steps
};

struct ProcessConfig {
    int n = 0;
    int q = 0;
    std::uint64_t seed = 0;
    StopCondition stop{};
    std::int64_t rejection_cap = 0;     // 0: adaptive default (see sample_available)
    std::int64_t checkpoint_stride = 0; // 0: max(1, expected steps / 200)
    EnumerationBudget budget{};
    int estimate_samples = 10'000;      // Monte Carlo samples for |H| and codegrees
    TrackedPolicy tracked{};
};

/**
 * Mutable state of one run. The edge-sampling stream (rng) is consumed only
 * by sample_available, so the edge sequence of a seed is invariant under
 * tracing and estimation settings; estimators draw from the aux stream.
 * Time is kept as the exact pair (step, n): t_i = step / (n(n-1)).
 */
struct ProcessState {
    LinearHypergraph hypergraph;
    std::int64_t step = 0;
    SplitMix64 rng;
    SplitMix64 aux_rng;
    EnumerationBudget budget;
    std::int64_t rejection_cap = 0;     // 0: adaptive

    double t() const {
        return static_cast<double>(step) /
               (static_cast<double>(hypergraph.n()) * (hypergraph.n() - 1));
    }

    // Engine bookkeeping: once an exact fallback enumerated H(i) and it was
    // small enough, the list is kept and filtered after each add (endgame mode).
    std::vector<int> cached_available;
    bool cache_valid = false;
    double h_estimate = 0.0;            // last-known |H| estimate, drives the cap

    explicit ProcessState(const ProcessConfig& config);
};

/**
 * Draws the next edge exactly uniformly over H(i): rejection sampling of
 * uniform q-subsets, falling back to exact enumeration after rejection_cap
 * consecutive misses (conditioning rejection sampling on acceptance leaves
 * the uniform distribution on H(i) intact). Returns false iff H(i) is empty,
 * i.e. the state is maximal.
 */
bool sample_available(ProcessState& state, std::vector<int>& out);

// Applies an accepted edge and advances the step counter.
void apply_edge(ProcessState& state, std::span<const int> e);

// Monte Carlo |H(i)| over `samples` uniform q-subsets: returns the estimate
// C(n,q) * acceptance fraction and its binomial standard error. Consumes the
// aux stream only.
std::pair<double, double> estimate_available(ProcessState& state, int samples);

struct TraceRow {
    std::int64_t step = 0;
    double t = 0.0;
    std::int64_t covered_pairs = 0;
    double h_value = 0.0;
    bool h_exact = true;
    double h_pred = 0.0;     // C(n,q) p^C(q,2), defined at every t
    double eps_h = 0.0;      // NaN outside the envelope domain
    std::vector<BandRecord> tracked;
};

struct ProcessTrace {
    std::vector<TraceRow> rows;
};

struct RunResult {
    ProcessConfig config;
    std::int64_t steps = 0;
    bool reached_maximal = false;
    std::optional<bool> g_m0;           // band status; empty when no envelope applies
    double max_rel_dev_h = 0.0;         // max ||H|-h|/h over in-domain checkpoints
    std::optional<TrajectoryParams> params;
    std::vector<TrackedSet> tracked_sets;
    ProcessTrace trace;
    std::optional<LinearHypergraph> final_hypergraph;
    double wall_seconds = 0.0;

    std::int64_t final_edges() const { return final_hypergraph->edge_count(); }
};

// Executes the process to the stop condition. Identical configs produce
// identical traces bit for bit (wall_seconds excepted).
RunResult run(const ProcessConfig& config);

}  // namespace qlinear

#endif

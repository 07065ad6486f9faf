#ifndef QLINEAR_CODEGREE_HPP
#define QLINEAR_CODEGREE_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qlinear/availability.hpp"
#include "qlinear/linear_hypergraph.hpp"
#include "qlinear/rng.hpp"
#include "qlinear/trajectory.hpp"

namespace qlinear {

// Number of (q-j)-sets K disjoint from J with J u K available. For J = {}
// this is |H(i)| itself. Throws budget_error when C(n-j, q-j) exceeds the
// enumeration budget (callers fall back to sampled_codegree).
std::int64_t exact_codegree(const LinearHypergraph& h, std::span<const int> J,
                            const EnumerationBudget& budget = {});

// Monte Carlo codegree: C(n-j, q-j) times the acceptance fraction over
// `samples` uniform disjoint (q-j)-sets, with its binomial standard error.
std::pair<double, double> sampled_codegree(const LinearHypergraph& h, std::span<const int> J,
                                           int samples, SplitMix64& rng);

/**
 * One tracked set J. Once no available edge contains J (J has left P_j) the
 * set is frozen: the value recorded at the detection checkpoint is kept and
 * never changes at later steps. In exact mode that value is necessarily 0,
 * since leaving P_j and having an empty extension set are the same event.
 */
struct TrackedSet {
    std::vector<int> vertices;      // sorted 1-based labels; empty = the set {}
    bool frozen = false;
    double frozen_value = 0.0;
    bool frozen_estimated = false;
    std::int64_t frozen_step = -1;
};

/**
 * Band record for one tracked set at one checkpoint:
 *   plus_residual  = |Y_J| - (y_j + eps_j)
 *   minus_residual = |Y_J| - (y_j - eps_j)
 *   good           = plus_residual <= 0 <= minus_residual
 * band_defined is false when no trajectory envelope applies (no params, or
 * the checkpoint lies past m0). Frozen sets re-emit their frozen record; the
 * band claim quantifies over sets still in P_j, so frozen records never
 * enter the good-event latch.
 */
struct BandRecord {
    int set_index = 0;
    std::int64_t step = 0;
    double value = 0.0;
    bool estimated = false;
    bool frozen = false;
    bool band_defined = false;
    double plus_residual = 0.0;
    double minus_residual = 0.0;
    bool good = true;
};

struct TrackedPolicy {
    int sets_per_size = 25;  // random certificate sets per size j
};

/**
 * Owns the tracked family of one run: J = {} plus a seeded random sample of
 * sets per size j in {1, 2}, extended up to j = q-1 when q <= 4. Applies the
 * freezing convention and latches the good event G: once any defined band
 * residual of an unfrozen set goes bad, g_ok() stays false.
 */
class CodegreeTracker {
public:
    CodegreeTracker(int n, int q, const TrackedPolicy& policy, std::uint64_t seed);

    const std::vector<TrackedSet>& sets() const { return sets_; }

    // Refresh every tracked set at a checkpoint. h_value is the caller's
    // |H(i)| (exact or estimated) and is used verbatim for J = {}; params may
    // be null (bands undefined). est_rng drives sampled refreshes.
    std::vector<BandRecord> update(const LinearHypergraph& h, std::int64_t step, double h_value,
                                   bool h_estimated, const TrajectoryParams* params,
                                   const EnumerationBudget& budget, int samples,
                                   SplitMix64& est_rng);

    bool g_ok() const { return g_ok_; }

private:
    int n_;
    int q_;
    std::vector<TrackedSet> sets_;
    bool g_ok_ = true;
};

}  // namespace qlinear

#endif

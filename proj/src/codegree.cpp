#include "qlinear/codegree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qlinear/combinatorics.hpp"

namespace qlinear {

namespace {

void validate_subset(const LinearHypergraph& h, std::span<const int> J, std::vector<int>& sorted) {
    if (static_cast<int>(J.size()) >= h.q())
        throw std::invalid_argument("codegree: require |J| < q");
    sorted.assign(J.begin(), J.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1 || sorted[i] > h.n())
            throw std::invalid_argument("codegree: vertex label out of range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("codegree: vertices must be distinct");
    }
}

bool internal_pairs_free(const LinearHypergraph& h, std::span<const int> J) {
    for (std::size_t i = 0; i < J.size(); ++i)
        for (std::size_t k = i + 1; k < J.size(); ++k)
            if (h.coverage().covered(J[i], J[k])) return false;
    return true;
}

// Vertices not in J, as sorted labels.
std::vector<int> complement_of(int n, std::span<const int> sorted_j) {
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n) - sorted_j.size());
    std::size_t at = 0;
    for (int v = 1; v <= n; ++v) {
        if (at < sorted_j.size() && sorted_j[at] == v) {
            ++at;
        } else {
            rest.push_back(v);
        }
    }
    return rest;
}

// Availability of J u K given that J's internal pairs are free: checks the
// K-internal pairs and the J-K cross pairs.
bool extension_available(const LinearHypergraph& h, std::span<const int> J,
                         std::span<const int> K) {
    const PairCoverage& cov = h.coverage();
    for (std::size_t i = 0; i < K.size(); ++i) {
        for (std::size_t k = i + 1; k < K.size(); ++k)
            if (cov.covered(K[i], K[k])) return false;
        for (int u : J)
            if (cov.covered(u, K[i])) return false;
    }
    return true;
}

}  // namespace

std::int64_t exact_codegree(const LinearHypergraph& h, std::span<const int> J,
                            const EnumerationBudget& budget) {
    std::vector<int> sj;
    validate_subset(h, J, sj);
    if (sj.empty()) return count_available(h, budget);
    if (!internal_pairs_free(h, sj)) return 0;

    const int n = h.n();
    const int q = h.q();
    const int j = static_cast<int>(sj.size());
    std::int64_t total = binom_exact(n - j, q - j);
    if (total < 0 || total > budget.max_candidates)
        throw budget_error("exact_codegree: C(n-j, q-j) exceeds enumeration budget");

    std::vector<int> rest = complement_of(n, sj);
    std::vector<int> idx;
    first_combination(idx, q - j);
    std::vector<int> K(static_cast<std::size_t>(q - j));
    std::int64_t count = 0;
    for (std::int64_t r = 0; r < total; ++r) {
        for (int i = 0; i < q - j; ++i) K[i] = rest[idx[i] - 1];
        if (extension_available(h, sj, K)) ++count;
        if (r + 1 < total) next_combination(idx, n - j);
    }
    return count;
}

std::pair<double, double> sampled_codegree(const LinearHypergraph& h, std::span<const int> J,
                                           int samples, SplitMix64& rng) {
    if (samples < 1) throw std::invalid_argument("sampled_codegree: require samples >= 1");
    std::vector<int> sj;
    validate_subset(h, J, sj);
    const int n = h.n();
    const int q = h.q();
    const int j = static_cast<int>(sj.size());
    const double space = binom_d(n - j, q - j);
    if (!internal_pairs_free(h, sj)) return {0.0, 0.0};

    std::vector<int> rest = complement_of(n, sj);
    std::vector<int> idx;
    std::vector<int> K(static_cast<std::size_t>(q - j));
    std::int64_t hits = 0;
    for (int s = 0; s < samples; ++s) {
        sample_subset_floyd(rng, n - j, q - j, idx);
        for (int i = 0; i < q - j; ++i) K[i] = rest[idx[i] - 1];
        if (extension_available(h, sj, K)) ++hits;
    }
    const double frac = static_cast<double>(hits) / samples;
    const double se = space * std::sqrt(frac * (1.0 - frac) / samples);
    return {space * frac, se};
}

CodegreeTracker::CodegreeTracker(int n, int q, const TrackedPolicy& policy, std::uint64_t seed)
    : n_(n), q_(q) {
    sets_.push_back(TrackedSet{});  // J = {}, |Y_{}| = |H(i)|
    SplitMix64 rng = SplitMix64(seed).derive(0x7261636B65724ALL);  // family stream
    // Sizes 1 and 2 always; all sizes up to q-1 when q <= 4. Tracking every
    // C(n,j) set is infeasible, a fixed random certificate family suffices.
    int max_j = (q <= 4) ? q - 1 : std::min(2, q - 1);
    for (int j = 1; j <= max_j; ++j) {
        std::int64_t universe = binom_exact(n, j);
        std::int64_t want = std::min<std::int64_t>(policy.sets_per_size, universe);
        std::vector<std::vector<int>> chosen;
        std::vector<int> draw;
        while (static_cast<std::int64_t>(chosen.size()) < want) {
            sample_subset_floyd(rng, n, j, draw);
            if (std::find(chosen.begin(), chosen.end(), draw) == chosen.end())
                chosen.push_back(draw);
        }
        std::sort(chosen.begin(), chosen.end());
        for (auto& v : chosen) sets_.push_back(TrackedSet{std::move(v)});
    }
}

std::vector<BandRecord> CodegreeTracker::update(const LinearHypergraph& h, std::int64_t step,
                                                double h_value, bool h_estimated,
                                                const TrajectoryParams* params,
                                                const EnumerationBudget& budget, int samples,
                                                SplitMix64& est_rng) {
    std::vector<BandRecord> records;
    records.reserve(sets_.size());

    const bool in_domain = params != nullptr && step <= params->m0;
    CurvePoint curve;
    if (in_domain) curve = eval_curves(*params, params->t_of(step));

    for (std::size_t s = 0; s < sets_.size(); ++s) {
        TrackedSet& tracked = sets_[s];
        const int j = static_cast<int>(tracked.vertices.size());

        BandRecord rec;
        rec.set_index = static_cast<int>(s);
        rec.step = step;

        if (tracked.frozen) {
            rec.frozen = true;
            rec.value = tracked.frozen_value;
            rec.estimated = tracked.frozen_estimated;
        } else if (j == 0) {
            rec.value = h_value;
            rec.estimated = h_estimated;
        } else {
            bool now_frozen = false;
            if (!internal_pairs_free(h, tracked.vertices)) {
                now_frozen = true;
                rec.value = 0.0;
            } else {
                std::int64_t exact = -1;
                try {
                    exact = exact_codegree(h, tracked.vertices, budget);
                } catch (const budget_error&) {
                }
                if (exact >= 0) {
                    rec.value = static_cast<double>(exact);
                    now_frozen = exact == 0;
                } else {
                    auto [est, se] = sampled_codegree(h, tracked.vertices, samples, est_rng);
                    rec.value = est;
                    rec.estimated = true;
                    if (est == 0.0 && samples >= 10'000) {
                        // A zero estimate alone must not freeze the set: confirm
                        // exactly, restricted to extensions through free pairs.
                        std::vector<int> candidates;
                        for (int v = 1; v <= n_; ++v) {
                            if (std::find(tracked.vertices.begin(), tracked.vertices.end(), v) !=
                                tracked.vertices.end())
                                continue;
                            bool ok = true;
                            for (int u : tracked.vertices)
                                if (h.coverage().covered(u, v)) {
                                    ok = false;
                                    break;
                                }
                            if (ok) candidates.push_back(v);
                        }
                        now_frozen = !free_graph_has_clique(h.free_pairs(), q_ - j, candidates,
                                                            budget.max_clique_nodes);
                    }
                }
            }
            if (now_frozen) {
                tracked.frozen = true;
                tracked.frozen_value = rec.value;
                tracked.frozen_estimated = rec.estimated;
                tracked.frozen_step = step;
                rec.frozen = true;
            }
        }

        if (in_domain && !rec.frozen) {
            const double y = curve.y(j);
            const double eps = curve.eps(j);
            rec.band_defined = true;
            rec.plus_residual = rec.value - (y + eps);
            rec.minus_residual = rec.value - (y - eps);
            rec.good = rec.plus_residual <= 0.0 && rec.minus_residual >= 0.0;
            if (!rec.good) g_ok_ = false;  // the validator latches
        }
        records.push_back(rec);
    }
    return records;
}

}  // namespace qlinear

#include "qlinear/process.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qlinear/combinatorics.hpp"

namespace qlinear {

namespace {

constexpr std::int64_t kEndgameCacheMax = 8192;   // keep the enumerated list below this
constexpr std::int64_t kMinRejectionCap = 1000;

std::int64_t adaptive_cap(const ProcessState& state) {
    if (state.rejection_cap > 0) return state.rejection_cap;
    const double total = binom_d(state.hypergraph.n(), state.hypergraph.q());
    const double expected = total / std::max(1.0, state.h_estimate);
    const double cap = 64.0 * std::ceil(expected);
    if (cap > 1e12) return static_cast<std::int64_t>(1e12);
    return std::max<std::int64_t>(kMinRejectionCap, static_cast<std::int64_t>(cap));
}

// Number of common elements of two sorted vectors/spans.
int sorted_overlap(std::span<const int> a, std::span<const int> b) {
    int i = 0, j = 0, c = 0;
    while (i < static_cast<int>(a.size()) && j < static_cast<int>(b.size())) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++c; ++i; ++j; }
    }
    return c;
}

}  // namespace

ProcessState::ProcessState(const ProcessConfig& config)
    : hypergraph(config.n, config.q),
      rng(config.seed),
      aux_rng(SplitMix64(config.seed).derive(0xE57A11)),
      budget(config.budget),
      rejection_cap(config.rejection_cap),
      h_estimate(binom_d(config.n, config.q)) {}

bool sample_available(ProcessState& state, std::vector<int>& out) {
    const int n = state.hypergraph.n();
    const int q = state.hypergraph.q();

    if (state.cache_valid) {
        const std::int64_t count = static_cast<std::int64_t>(state.cached_available.size()) / q;
        if (count == 0) return false;
        const std::int64_t idx = static_cast<std::int64_t>(state.rng.below(count));
        out.assign(state.cached_available.begin() + idx * q,
                   state.cached_available.begin() + (idx + 1) * q);
        return true;
    }

    const std::int64_t cap = adaptive_cap(state);
    for (std::int64_t attempt = 1; attempt <= cap; ++attempt) {
        sample_subset_floyd(state.rng, n, q, out);
        if (state.hypergraph.is_available_unchecked(out)) {
            const double total = binom_d(n, q);
            state.h_estimate = std::max(
                1.0, 0.875 * state.h_estimate + 0.125 * total / static_cast<double>(attempt));
            return true;
        }
    }

    // Exact fallback: enumerate H(i) and draw uniformly from it.
    std::vector<int> listing;
    const std::int64_t count = enumerate_available(state.hypergraph, listing, state.budget);
    state.h_estimate = std::max(1.0, static_cast<double>(count));
    if (count == 0) {
        state.cached_available.clear();
        state.cache_valid = true;
        return false;
    }
    if (count <= kEndgameCacheMax) {
        state.cached_available = std::move(listing);
        state.cache_valid = true;
        const std::int64_t idx = static_cast<std::int64_t>(state.rng.below(count));
        out.assign(state.cached_available.begin() + idx * q,
                   state.cached_available.begin() + (idx + 1) * q);
        return true;
    }
    const std::int64_t idx = static_cast<std::int64_t>(state.rng.below(count));
    out.assign(listing.begin() + idx * q, listing.begin() + (idx + 1) * q);
    return true;
}

void apply_edge(ProcessState& state, std::span<const int> e) {
    state.hypergraph.add_edge(e);
    ++state.step;
    if (state.cache_valid) {
        // H is monotone: drop the sets the new edge made unavailable.
        const int q = state.hypergraph.q();
        std::vector<int>& cache = state.cached_available;
        std::int64_t kept = 0;
        const std::int64_t count = static_cast<std::int64_t>(cache.size()) / q;
        for (std::int64_t i = 0; i < count; ++i) {
            std::span<const int> s(cache.data() + i * q, static_cast<std::size_t>(q));
            if (sorted_overlap(s, e) <= 1) {
                if (kept != i)
                    std::copy(s.begin(), s.end(), cache.begin() + kept * q);
                ++kept;
            }
        }
        cache.resize(static_cast<std::size_t>(kept * q));
    }
}

std::pair<double, double> estimate_available(ProcessState& state, int samples) {
    if (samples < 1) throw std::invalid_argument("estimate_available: require samples >= 1");
    const int n = state.hypergraph.n();
    const int q = state.hypergraph.q();
    const double total = binom_d(n, q);
    std::vector<int> draw;
    std::int64_t hits = 0;
    for (int s = 0; s < samples; ++s) {
        sample_subset_floyd(state.aux_rng, n, q, draw);
        if (state.hypergraph.is_available_unchecked(draw)) ++hits;
    }
    const double frac = static_cast<double>(hits) / samples;
    return {total * frac, total * std::sqrt(frac * (1.0 - frac) / samples)};
}

namespace {

// |H(i)| for a checkpoint: exact when cheap (always for q = 3), else Monte
// Carlo with the configured sample count.
std::pair<double, bool> checkpoint_h(ProcessState& state, int samples) {
    if (state.cache_valid)
        return {static_cast<double>(state.cached_available.size() / state.hypergraph.q()), true};
    try {
        return {static_cast<double>(count_available(state.hypergraph, state.budget)), true};
    } catch (const budget_error&) {
        return {estimate_available(state, samples).first, false};
    }
}

}  // namespace

RunResult run(const ProcessConfig& config) {
    if (config.q < 2 || config.q > config.n)
        throw std::invalid_argument("run: require 2 <= q <= n");
    if (config.stop.rule == StopCondition::Rule::Steps && config.stop.steps < 0)
        throw std::invalid_argument("run: negative step target");

    const auto t0 = std::chrono::steady_clock::now();

    std::optional<TrajectoryParams> params;
    if (config.q >= 3 && config.n >= 16) params = make_params(config.n, config.q);
    if (config.stop.rule == StopCondition::Rule::M0 && !params)
        throw std::invalid_argument("run: stop=m0 needs trajectory params (q >= 3, n >= 16)");

    std::int64_t target;
    switch (config.stop.rule) {
        case StopCondition::Rule::Steps: target = config.stop.steps; break;
        case StopCondition::Rule::M0: target = params->m0; break;
        default: target = std::numeric_limits<std::int64_t>::max(); break;
    }

    std::int64_t stride = config.checkpoint_stride;
    if (stride <= 0) {
        std::int64_t horizon;
        if (config.stop.rule == StopCondition::Rule::Steps) horizon = config.stop.steps;
        else if (params) horizon = params->m0;
        else horizon = static_cast<std::int64_t>(config.n) * (config.n - 1) /
                       (static_cast<std::int64_t>(config.q) * (config.q - 1));
        stride = std::max<std::int64_t>(1, horizon / 200);
    }

    ProcessState state(config);
    CodegreeTracker tracker(config.n, config.q, config.tracked, config.seed);

    RunResult result;
    result.config = config;
    result.params = params;
    result.max_rel_dev_h = params ? 0.0 : std::numeric_limits<double>::quiet_NaN();

    auto checkpoint = [&]() {
        auto [h_value, h_exact] = checkpoint_h(state, config.estimate_samples);
        TraceRow row;
        row.step = state.step;
        row.t = state.t();
        row.covered_pairs = state.hypergraph.coverage().covered_count();
        row.h_value = h_value;
        row.h_exact = h_exact;
        const double p = std::max(p_of(config.q, row.t), 0.0);
        row.h_pred = std::exp(log_binom(config.n, config.q) +
                              static_cast<double>(config.q) * (config.q - 1) / 2.0 * std::log(p));
        row.eps_h = std::numeric_limits<double>::quiet_NaN();
        row.tracked = tracker.update(state.hypergraph, state.step, h_value, !h_exact,
                                     params ? &*params : nullptr, state.budget,
                                     config.estimate_samples, state.aux_rng);
        if (params && state.step <= params->m0) {
            row.eps_h = eval_curves(*params, state.t()).eps_h();
            const double dev = std::fabs(h_value - row.h_pred) / row.h_pred;
            result.max_rel_dev_h = std::max(result.max_rel_dev_h, dev);
        }
        result.trace.rows.push_back(std::move(row));
    };

    checkpoint();  // step 0

    std::vector<int> edge;
    while (state.step < target) {
        if (!sample_available(state, edge)) {
            result.reached_maximal = true;
            break;
        }
        apply_edge(state, edge);
        if (state.step % stride == 0) checkpoint();
    }
    if (state.step % stride != 0) checkpoint();

    result.steps = state.step;
    result.g_m0 = params ? std::optional<bool>(tracker.g_ok()) : std::nullopt;
    result.tracked_sets = tracker.sets();
    result.final_hypergraph = std::move(state.hypergraph);
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace qlinear

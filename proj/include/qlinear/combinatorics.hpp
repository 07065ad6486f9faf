#ifndef QLINEAR_COMBINATORICS_HPP
#define QLINEAR_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

namespace qlinear {

// Exact binomial coefficients are used below this threshold, lgamma above.
inline constexpr std::int64_t kExactBinomThreshold = 1'000'000'000'000'000LL;  // 1e15

// Exact C(n, k), or -1 if the value exceeds kExactBinomThreshold.
std::int64_t binom_exact(std::int64_t n, std::int64_t k);

// log C(n, k) via lgamma (natural log). Requires 0 <= k <= n.
double log_binom(double n, double k);

// C(n, k) as double: exact integer below the threshold, exp(log_binom) above.
double binom_d(std::int64_t n, std::int64_t k);

// Canonical index of the unordered pair {u, v}, 0-based, u != v.
inline std::int64_t pair_index(int u, int v) {
    if (u > v) { int t = u; u = v; v = t; }
    return static_cast<std::int64_t>(v) * (v - 1) / 2 + u;
}

// Advances c (sorted, 1-based labels) to the next k-combination of [1..n]
// in lexicographic order. Returns false when c was the last one.
bool next_combination(std::vector<int>& c, int n);

// First k-combination of [1..n]: {1, 2, ..., k}.
void first_combination(std::vector<int>& c, int k);

// Writes the combination of [1..n] with lexicographic rank r (0-based) to out.
void unrank_combination(std::int64_t r, int n, int k, std::vector<int>& out);

}  // namespace qlinear

#endif

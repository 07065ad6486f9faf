#include "qlinear/combinatorics.hpp"

#include <cmath>
#include <stdexcept>

namespace qlinear {

std::int64_t binom_exact(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - k + i);
        acc /= static_cast<unsigned __int128>(i);
        if (acc > static_cast<unsigned __int128>(kExactBinomThreshold)) return -1;
    }
    return static_cast<std::int64_t>(acc);
}

double log_binom(double n, double k) {
    if (k < 0.0 || k > n) throw std::domain_error("log_binom: require 0 <= k <= n");
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double binom_d(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0.0;
    std::int64_t e = binom_exact(n, k);
    if (e >= 0) return static_cast<double>(e);
    return std::exp(log_binom(static_cast<double>(n), static_cast<double>(k)));
}

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - (k - 1 - i)) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void first_combination(std::vector<int>& c, int k) {
    c.resize(k);
    for (int i = 0; i < k; ++i) c[i] = i + 1;
}

void unrank_combination(std::int64_t r, int n, int k, std::vector<int>& out) {
    out.resize(k);
    int v = 1;
    for (int pos = 0; pos < k; ++pos) {
        for (;; ++v) {
            std::int64_t block = binom_exact(n - v, k - pos - 1);
            if (block < 0) throw std::overflow_error("unrank_combination: binomial overflow");
            if (r < block) break;
            r -= block;
        }
        out[pos] = v++;
    }
}

}  // namespace qlinear

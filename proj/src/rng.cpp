#include "qlinear/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlinear {

void sample_subset_floyd(SplitMix64& rng, int n, int k, std::vector<int>& out) {
    if (k < 0 || k > n) throw std::invalid_argument("sample_subset_floyd: require 0 <= k <= n");
    out.clear();
    for (int j = n - k + 1; j <= n; ++j) {
        int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(j))) + 1;
        if (std::find(out.begin(), out.end(), r) != out.end()) {
            out.push_back(j);
        } else {
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end());
}

}  // namespace qlinear

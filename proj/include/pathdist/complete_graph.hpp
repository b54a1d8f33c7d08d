#pragma once

#include <string>

#include "numeric.hpp"
#include "path_search.hpp"

namespace pathdist {

// Number of simple paths of the given length between any fixed pair of
// distinct nodes in the complete graph on n nodes. With k = length - 1
// intermediate hops, the count is 1 for k = 0, the falling product
// (n-2)(n-3)...(n-k-1) for 0 < k < n-1, and 0 for k >= n-1.
inline BigInt complete_path_count(int n, int length) {
    if (n < 2) throw ValidationError("complete graph needs at least 2 nodes");
    if (length < 1) throw ValidationError("path length must be at least 1");
    const int k = length - 1;
    if (k == 0) return 1;
    if (k >= n - 1) return 0;
    BigInt product = 1;
    for (int r = 2; r <= k + 1; ++r) product *= n - r;
    return product;
}

// Full analytic distribution for a pair in the complete graph on n nodes; all
// pairs are equivalent, so the pair is fixed at (0, 1).
inline PathLengthDistribution complete_distribution(int n) {
    if (n < 2) throw ValidationError("complete graph needs at least 2 nodes");
    PathLengthDistribution dist;
    dist.pair = {0, 1};
    dist.limit = n - 1;
    dist.exhausted = true;
    dist.shortest = 1;
    dist.longest_found = n - 1;
    dist.counts.assign(static_cast<std::size_t>(n), BigInt(0));
    for (int len = 1; len <= n - 1; ++len)
        dist.counts[static_cast<std::size_t>(len)] = complete_path_count(n, len);
    return dist;
}

} // namespace pathdist

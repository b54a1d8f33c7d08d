#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "numeric.hpp"
#include "path_search.hpp"
#include "walk_counts.hpp"

namespace pathdist {

// Truncated k-th order expected path length: the mean over the length window
// [sPL, sPL+k]. Counts below sPL are zero, so summing from 1 would give the
// same value. Windows reaching past the depth limit are only allowed once the
// distribution is exhausted, where the missing counts are provably zero.
inline Rational truncated_expected_path_length(const PathLengthDistribution& dist, int k) {
    if (k < 0) throw ValidationError("approximation order k must be non-negative");
    const int start = dist.shortest;
    const int end = start + k;
    if (end > dist.limit && !dist.exhausted)
        throw ValidationError("distribution truncated before window end: need limit >= " +
                              std::to_string(end) + ", have " + std::to_string(dist.limit));
    BigInt num = 0;
    BigInt den = 0;
    for (int n = start; n <= std::min(end, dist.limit); ++n) {
        const BigInt& c = dist.counts[static_cast<std::size_t>(n)];
        num += c * n;
        den += c;
    }
    if (den == 0) throw ValidationError("empty truncation window: no paths in [" +
                                        std::to_string(start) + ", " + std::to_string(end) + "]");
    return make_rational(num, den);
}

inline Rational truncated_expected_walk_length(const WalkCountSeries& series, int k) {
    if (k < 0) throw ValidationError("approximation order k must be non-negative");
    if (series.no_walk_found)
        throw ValidationError("empty truncation window: no walks found within bound");
    const int start = series.shortest_walk_length;
    const int end = start + k;
    if (end > series.max_len)
        throw ValidationError("series truncated before window end: need max_len >= " +
                              std::to_string(end) + ", have " + std::to_string(series.max_len));
    BigInt num = 0;
    BigInt den = 0;
    for (int n = start; n <= end; ++n) {
        const BigInt& c = series.counts[static_cast<std::size_t>(n)];
        num += c * n;
        den += c;
    }
    if (den == 0) throw ValidationError("empty truncation window");
    return make_rational(num, den);
}

// Expected length under the k-th order approximation minus the shortest
// length; zero at k = 0, and saturating in k for paths.
inline Rational delta_measure(const PathLengthDistribution& dist, int k) {
    return truncated_expected_path_length(dist, k) - Rational(dist.shortest);
}

inline Rational walk_delta_measure(const WalkCountSeries& series, int k) {
    return truncated_expected_walk_length(series, k) - Rational(series.shortest_walk_length);
}

struct ConvergenceEntry {
    int k = 0;
    Rational expected_length;
    Rational delta;
};

struct ConvergenceReport {
    NodePair pair;
    Rational epsilon;
    int k_max = 0;
    std::vector<ConvergenceEntry> entries;
    std::optional<int> converged_at_k;
};

// Iteratively deepened scan of the truncated path expectation. Each round k
// recomputes the enumeration with limit sPL+k (clamped at N-1, where the
// distribution is exhausted and deeper windows pad with exact zeros); the
// final round's search dominates the total cost, so nothing is cached between
// rounds. Stops at the first k >= 1 whose successive-expectation change is
// below epsilon — comparison is exact rational, so float rounding can neither
// trigger nor mask a stop.
inline ConvergenceReport convergence_scan(const Graph& g, NodePair pair, const Rational& epsilon,
                                          int k_max, int threads = 0) {
    g.check_pair(pair);
    if (pair.source == pair.target)
        throw ValidationError("paths are open walks: source and target must differ");
    if (epsilon <= 0) throw ValidationError("epsilon must be positive");
    if (k_max < 0) throw ValidationError("k_max must be non-negative");

    ConvergenceReport report;
    report.pair = pair;
    report.epsilon = epsilon;
    report.k_max = k_max;

    const int spl = g.shortest_path_length(pair);
    for (int k = 0; k <= k_max; ++k) {
        const int limit = std::min(spl + k, g.node_count() - 1);
        const auto dist = count_paths_by_length(g, pair, limit, threads);
        const Rational expected = truncated_expected_path_length(dist, k);
        report.entries.push_back({k, expected, expected - Rational(spl)});
        if (k >= 1) {
            const Rational change =
                abs(expected - report.entries[static_cast<std::size_t>(k) - 1].expected_length);
            if (change < epsilon) {
                report.converged_at_k = k;
                break;
            }
        }
    }
    return report;
}

// Summary row for the all-pairs table. Mean is the exact rational over the
// whole distribution; mode ties break toward the smallest length.
struct PairStats {
    NodePair pair;
    BigInt total_paths;
    int min_length = 0;
    int max_length = 0;
    Rational mean_length;
    int mode_length = 0;
};

namespace detail {

inline PairStats summarize_counts(NodePair pair, const std::vector<BigInt>& counts) {
    PairStats stats;
    stats.pair = pair;
    BigInt weighted = 0;
    BigInt best = 0;
    for (int n = 0; n < static_cast<int>(counts.size()); ++n) {
        const BigInt& c = counts[static_cast<std::size_t>(n)];
        if (c == 0) continue;
        if (stats.min_length == 0) stats.min_length = n;
        stats.max_length = n;
        stats.total_paths += c;
        weighted += c * n;
        if (c > best) {
            best = c;
            stats.mode_length = n;
        }
    }
    if (stats.total_paths == 0)
        throw ValidationError("empty distribution: no paths between nodes " +
                              std::to_string(pair.source) + " and " + std::to_string(pair.target) +
                              " within the depth limit");
    stats.mean_length = make_rational(weighted, stats.total_paths);
    return stats;
}

} // namespace detail

inline PairStats summarize(const PathLengthDistribution& dist) {
    return detail::summarize_counts(dist.pair, dist.counts);
}

// One PairStats row per unordered pair {i, j}, i < j, ordered by (i, j); the
// counts come from a shared per-source sweep equivalent to running
// count_paths_by_length per pair at the same limit.
inline std::vector<PairStats> all_pairs_stats(const Graph& g, int limit, int threads = 0) {
    const auto counts = all_pairs_counts(g, limit, threads);
    std::vector<PairStats> rows;
    rows.reserve(static_cast<std::size_t>(g.node_count()) *
                 static_cast<std::size_t>(g.node_count() - 1) / 2);
    for (int i = 0; i + 1 < g.node_count(); ++i)
        for (int j = i + 1; j < g.node_count(); ++j)
            rows.push_back(detail::summarize_counts(
                {i, j}, counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    return rows;
}

} // namespace pathdist

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "graph.hpp"
#include "numeric.hpp"

namespace pathdist {

// Exact walk counts between a fixed pair: counts[n] = (A^n)[source][target]
// for n = 1..max_len; counts[0] is always zero. shortest_walk_length is the
// least n with a nonzero count; when no walk shows up within max_len the
// series carries no_walk_found instead (all-zero counts are well defined for
// disconnected pairs).
struct WalkCountSeries {
    NodePair pair;
    std::vector<BigInt> counts;
    int max_len = 0;
    int shortest_walk_length = 0;
    bool no_walk_found = true;

    const BigInt& count(int n) const {
        if (n < 0 || n > max_len)
            throw ValidationError("length " + std::to_string(n) + " outside series range");
        return counts[static_cast<std::size_t>(n)];
    }

    BigInt total() const {
        BigInt t = 0;
        for (const auto& c : counts) t += c;
        return t;
    }
};

// Incremental row of adjacency-matrix powers. Because A is a 0/1 matrix, row
// v of P*A is the sum of P-rows over the neighbours of v, so each advance is
// pure big-integer addition — no multiplication, no floating point.
class WalkCounter {
public:
    WalkCounter(const Graph& graph, int source) : graph_(&graph), source_(source) {
        graph.check_node(source);
        // row `source` of A^0 = I
        row_.assign(static_cast<std::size_t>(graph.node_count()), BigInt(0));
        row_[static_cast<std::size_t>(source)] = 1;
    }

    int source() const noexcept { return source_; }
    int power() const noexcept { return power_; }

    // entry (source, v) of A^power()
    const BigInt& count_to(int v) const {
        graph_->check_node(v);
        return row_[static_cast<std::size_t>(v)];
    }

    void advance() {
        const int n = graph_->node_count();
        scratch_.assign(static_cast<std::size_t>(n), BigInt(0));
        for (int v = 0; v < n; ++v) {
            BigInt& cell = scratch_[static_cast<std::size_t>(v)];
            for (int w : graph_->neighbors(v)) cell += row_[static_cast<std::size_t>(w)];
        }
        row_.swap(scratch_);
        ++power_;
    }

private:
    const Graph* graph_;
    int source_;
    int power_ = 0;
    std::vector<BigInt> row_;
    std::vector<BigInt> scratch_;
};

inline WalkCountSeries walk_counts(const Graph& graph, NodePair pair, int max_len) {
    graph.check_pair(pair);
    if (max_len < 1) throw ValidationError("walk length bound must be at least 1");

    WalkCountSeries series;
    series.pair = pair;
    series.max_len = max_len;
    series.counts.assign(static_cast<std::size_t>(max_len) + 1, BigInt(0));

    WalkCounter counter(graph, pair.source);
    for (int n = 1; n <= max_len; ++n) {
        counter.advance();
        series.counts[static_cast<std::size_t>(n)] = counter.count_to(pair.target);
        if (series.no_walk_found && series.counts[static_cast<std::size_t>(n)] != 0) {
            series.no_walk_found = false;
            series.shortest_walk_length = n;
        }
    }

    // a minimal walk cannot revisit a node, so the first nonzero power must
    // sit exactly at the BFS distance; checked, not assumed (a closed i-i
    // walk is exempt: its minimum is the trivial length-0 walk)
    if (!series.no_walk_found && pair.source != pair.target) {
        const int spl = graph.shortest_path_length(pair);
        if (spl != series.shortest_walk_length)
            throw Error("internal invariant broken: shortest walk length " +
                        std::to_string(series.shortest_walk_length) +
                        " differs from shortest path length " + std::to_string(spl));
    }
    return series;
}

inline BigInt walk_count(const Graph& graph, NodePair pair, int length) {
    if (length < 1) throw ValidationError("walk length must be at least 1");
    return walk_counts(graph, pair, length).counts[static_cast<std::size_t>(length)];
}

} // namespace pathdist

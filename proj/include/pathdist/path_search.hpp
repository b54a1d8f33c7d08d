#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "graph.hpp"
#include "numeric.hpp"
#include "walk_counts.hpp"

namespace pathdist {

// Exact per-length simple-path counts between one pair, found by exhaustive
// depth-limited search. counts[n] holds f_P(n) for n = 1..limit; counts[0] is
// always zero.
struct PathLengthDistribution {
    NodePair pair;
    std::vector<BigInt> counts;
    int limit = 0;          // requested depth bound
    bool exhausted = false; // limit >= N-1: no simple path can be longer
    int shortest = 0;       // sPL of the pair
    int longest_found = 0;  // largest n with counts[n] > 0, 0 if none
    bool below_shortest = false; // warning: limit < sPL, counts all zero

    const BigInt& count(int n) const {
        if (n < 0 || n > limit) throw ValidationError("length " + std::to_string(n) +
                                                      " outside distribution range");
        return counts[static_cast<std::size_t>(n)];
    }

    // Zero beyond the search bound — meaningful once exhausted is true.
    BigInt count_or_zero(int n) const {
        return (n >= 0 && n <= limit) ? counts[static_cast<std::size_t>(n)] : BigInt(0);
    }

    BigInt total() const {
        BigInt t = 0;
        for (const auto& c : counts) t += c;
        return t;
    }
};

namespace detail {

inline int resolve_thread_count(int threads) {
    if (threads < 0) throw ValidationError("thread count must be non-negative");
    if (threads == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
    return threads;
}

// Runs job(t) for t = 0..task_count-1 on up to `threads` workers. Tasks are
// claimed through an atomic cursor; callers must make merging order-independent.
template <typename Job>
void run_tasks(int task_count, int threads, Job&& job) {
    const int workers = std::min(std::max(threads, 1), task_count);
    if (workers <= 1) {
        for (int t = 0; t < task_count; ++t) job(t);
        return;
    }
    std::atomic<int> cursor{0};
    auto drain = [&] {
        for (int t; (t = cursor.fetch_add(1, std::memory_order_relaxed)) < task_count;) job(t);
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    for (int w = 1; w < workers; ++w) pool.emplace_back(drain);
    drain();
    for (auto& th : pool) th.join();
}

// Bitmask depth-first counter for graphs with at most 64 nodes. reach[r] masks
// the nodes within r hops of the target, so every explored prefix can still be
// completed within the depth budget.
class MaskPairCounter {
public:
    MaskPairCounter(const std::vector<std::uint64_t>& adj, const std::vector<std::uint64_t>& reach,
                    int target, int limit, std::uint64_t* counts)
        : adj_(adj.data()), reach_(reach.data()), target_bit_(std::uint64_t{1} << target),
          limit_(limit), counts_(counts) {}

    // v was reached with `depth` edges; visited includes v.
    void search(int v, std::uint64_t visited, int depth) {
        const int rem = limit_ - depth;
        std::uint64_t cand = adj_[v] & ~visited & reach_[rem - 1];
        if (cand & target_bit_) {
            ++counts_[depth + 1];
            cand ^= target_bit_;
        }
        if (rem >= 2) {
            while (cand) {
                const int w = std::countr_zero(cand);
                cand &= cand - 1;
                search(w, visited | (std::uint64_t{1} << w), depth + 1);
            }
        }
    }

private:
    const std::uint64_t* adj_;
    const std::uint64_t* reach_;
    std::uint64_t target_bit_;
    int limit_;
    std::uint64_t* counts_;
};

// Explicit-stack fallback for graphs beyond 64 nodes.
class GenericPairCounter {
public:
    GenericPairCounter(const Graph& g, const std::vector<int>& dist_to_target, int target,
                       int limit, std::uint64_t* counts)
        : g_(g), dist_(dist_to_target), target_(target), limit_(limit), counts_(counts),
          visited_(static_cast<std::size_t>(g.node_count()), 0) {}

    void search(int source_mark, int start, int start_depth) {
        visited_[static_cast<std::size_t>(source_mark)] = 1;
        visited_[static_cast<std::size_t>(start)] = 1;
        struct Frame {
            int v;
            std::size_t next;
        };
        std::vector<Frame> stack;
        stack.push_back({start, 0});
        while (!stack.empty()) {
            Frame& top = stack.back();
            const int depth = start_depth + static_cast<int>(stack.size()) - 1;
            const int rem = limit_ - depth;
            const auto& nbrs = g_.neighbors(top.v);
            bool descended = false;
            while (top.next < nbrs.size()) {
                const int w = nbrs[top.next++];
                if (visited_[static_cast<std::size_t>(w)]) continue;
                if (w == target_) {
                    ++counts_[depth + 1];
                    continue;
                }
                const int dw = dist_[static_cast<std::size_t>(w)];
                if (dw < 0 || dw > rem - 1 || rem < 2) continue;
                visited_[static_cast<std::size_t>(w)] = 1;
                stack.push_back({w, 0});
                descended = true;
                break;
            }
            if (!descended) {
                visited_[static_cast<std::size_t>(top.v)] = 0;
                stack.pop_back();
            }
        }
        visited_[static_cast<std::size_t>(source_mark)] = 0;
    }

private:
    const Graph& g_;
    const std::vector<int>& dist_;
    int target_;
    int limit_;
    std::uint64_t* counts_;
    std::vector<char> visited_;
};

inline std::vector<std::uint64_t> reach_masks(const Graph& g, int target, int depth_budget) {
    const auto dist = g.bfs_distances(target);
    std::vector<std::uint64_t> reach(static_cast<std::size_t>(std::max(depth_budget, 1)), 0);
    for (int v = 0; v < g.node_count(); ++v) {
        const int d = dist[static_cast<std::size_t>(v)];
        if (d < 0 || d >= depth_budget) continue;
        for (int r = d; r < depth_budget; ++r)
            reach[static_cast<std::size_t>(r)] |= std::uint64_t{1} << v;
    }
    return reach;
}

} // namespace detail

// Exact number of simple paths of each length n = 1..limit from pair.source
// to pair.target. The search splits at the root: each first-hop neighbour of
// the source is an independent depth-limited search, and per-length tallies
// are merged in neighbour order, so results are identical for any thread
// count. Tallies are machine words per task (a feasible run cannot perform
// 2^64 increments) and are summed into big integers.
inline PathLengthDistribution count_paths_by_length(const Graph& g, NodePair pair, int limit,
                                                    int threads = 0) {
    g.check_pair(pair);
    if (pair.source == pair.target)
        throw ValidationError("paths are open walks: source and target must differ");
    if (limit < 1) throw ValidationError("depth limit must be at least 1");
    const int workers = detail::resolve_thread_count(threads);

    PathLengthDistribution dist;
    dist.pair = pair;
    dist.limit = limit;
    dist.exhausted = limit >= g.node_count() - 1;
    dist.shortest = g.shortest_path_length(pair);
    dist.counts.assign(static_cast<std::size_t>(limit) + 1, BigInt(0));
    if (limit < dist.shortest) {
        dist.below_shortest = true;
        return dist;
    }

    // no simple path has more than N-1 edges
    const int depth = std::min(limit, g.node_count() - 1);
    const auto dist_to_target = g.bfs_distances(pair.target);

    // root split: one task per useful first hop
    std::vector<int> roots;
    for (int w : g.neighbors(pair.source)) {
        const int dw = dist_to_target[static_cast<std::size_t>(w)];
        if (dw >= 0 && dw <= depth - 1) roots.push_back(w);
    }
    std::vector<std::vector<std::uint64_t>> tallies(
        roots.size(), std::vector<std::uint64_t>(static_cast<std::size_t>(depth) + 1, 0));

    if (g.has_masks()) {
        const auto reach = detail::reach_masks(g, pair.target, depth);
        const auto& adj = g.adjacency_masks();
        detail::run_tasks(static_cast<int>(roots.size()), workers, [&](int t) {
            const int w = roots[static_cast<std::size_t>(t)];
            auto& tally = tallies[static_cast<std::size_t>(t)];
            if (w == pair.target) {
                tally[1] = 1;
                return;
            }
            if (depth < 2) return;
            detail::MaskPairCounter counter(adj, reach, pair.target, depth, tally.data());
            const std::uint64_t visited =
                (std::uint64_t{1} << pair.source) | (std::uint64_t{1} << w);
            counter.search(w, visited, 1);
        });
    } else {
        detail::run_tasks(static_cast<int>(roots.size()), workers, [&](int t) {
            const int w = roots[static_cast<std::size_t>(t)];
            auto& tally = tallies[static_cast<std::size_t>(t)];
            if (w == pair.target) {
                tally[1] = 1;
                return;
            }
            if (depth < 2) return;
            detail::GenericPairCounter counter(g, dist_to_target, pair.target, depth,
                                               tally.data());
            counter.search(pair.source, w, 1);
        });
    }

    for (const auto& tally : tallies)
        for (int n = 1; n <= depth; ++n)
            dist.counts[static_cast<std::size_t>(n)] += tally[static_cast<std::size_t>(n)];
    for (int n = depth; n >= 1; --n) {
        if (dist.counts[static_cast<std::size_t>(n)] != 0) {
            dist.longest_found = n;
            break;
        }
    }
    return dist;
}

// Materializing variant: feeds every simple path of length <= limit to the
// consumer, in lexicographic node-sequence order, and returns how many were
// emitted. Single-threaded; meant for debugging and oracle checks.
inline BigInt enumerate_paths(const Graph& g, NodePair pair, int limit,
                              const std::function<void(const std::vector<int>&)>& consumer) {
    g.check_pair(pair);
    if (pair.source == pair.target)
        throw ValidationError("paths are open walks: source and target must differ");
    if (limit < 1) throw ValidationError("depth limit must be at least 1");

    const int depth = std::min(limit, g.node_count() - 1);
    const auto dist_to_target = g.bfs_distances(pair.target);
    std::vector<char> visited(static_cast<std::size_t>(g.node_count()), 0);
    std::vector<int> path{pair.source};
    visited[static_cast<std::size_t>(pair.source)] = 1;
    BigInt emitted = 0;

    // neighbour lists are sorted, so recursion order is lexicographic
    const std::function<void(int, int)> walk = [&](int v, int used) {
        const int rem = depth - used;
        for (int w : g.neighbors(v)) {
            if (visited[static_cast<std::size_t>(w)]) continue;
            if (w == pair.target) {
                path.push_back(w);
                consumer(path);
                ++emitted;
                path.pop_back();
                continue;
            }
            const int dw = dist_to_target[static_cast<std::size_t>(w)];
            if (dw < 0 || dw > rem - 1 || rem < 2) continue;
            visited[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            walk(w, used + 1);
            path.pop_back();
            visited[static_cast<std::size_t>(w)] = 0;
        }
    };
    if (depth >= 1) walk(pair.source, 0);
    return emitted;
}

namespace detail {

// Per-source sweep for the all-pairs table: one DFS from `source` visits every
// simple path at most once and tallies arrivals at every node above `source`,
// so each unordered pair is counted by exactly one task.
class MaskSourceSweep {
public:
    MaskSourceSweep(const std::vector<std::uint64_t>& adj, int source, int limit, int node_count,
                    std::uint64_t* tally)
        : adj_(adj.data()), source_(source), limit_(limit), stride_(limit + 1), tally_(tally) {
        (void)node_count;
    }

    void search(int v, std::uint64_t visited, int depth) {
        std::uint64_t cand = adj_[v] & ~visited;
        const bool descend = depth + 1 < limit_;
        while (cand) {
            const int w = std::countr_zero(cand);
            cand &= cand - 1;
            if (w > source_) ++tally_[w * stride_ + depth + 1];
            if (descend) search(w, visited | (std::uint64_t{1} << w), depth + 1);
        }
    }

private:
    const std::uint64_t* adj_;
    int source_;
    int limit_;
    int stride_;
    std::uint64_t* tally_;
};

class GenericSourceSweep {
public:
    GenericSourceSweep(const Graph& g, int source, int limit, std::uint64_t* tally)
        : g_(g), source_(source), limit_(limit), stride_(limit + 1), tally_(tally),
          visited_(static_cast<std::size_t>(g.node_count()), 0) {}

    void run() {
        visited_[static_cast<std::size_t>(source_)] = 1;
        struct Frame {
            int v;
            std::size_t next;
        };
        std::vector<Frame> stack;
        stack.push_back({source_, 0});
        while (!stack.empty()) {
            Frame& top = stack.back();
            const int depth = static_cast<int>(stack.size()) - 1;
            const auto& nbrs = g_.neighbors(top.v);
            bool descended = false;
            while (top.next < nbrs.size()) {
                const int w = nbrs[top.next++];
                if (visited_[static_cast<std::size_t>(w)]) continue;
                if (w > source_) ++tally_[w * stride_ + depth + 1];
                if (depth + 1 < limit_) {
                    visited_[static_cast<std::size_t>(w)] = 1;
                    stack.push_back({w, 0});
                    descended = true;
                    break;
                }
            }
            if (!descended) {
                visited_[static_cast<std::size_t>(top.v)] = 0;
                stack.pop_back();
            }
        }
    }

private:
    const Graph& g_;
    int source_;
    int limit_;
    int stride_;
    std::uint64_t* tally_;
    std::vector<char> visited_;
};

} // namespace detail

// Raw all-pairs tallies: result[i][j] for i < j is the per-length count vector
// (index = length, 0..min(limit, N-1)) of simple paths between i and j.
// Parallelism is one task per source node; every pair belongs to exactly one
// task, so merged output is independent of scheduling.
inline std::vector<std::vector<std::vector<BigInt>>> all_pairs_counts(const Graph& g, int limit,
                                                                      int threads = 0) {
    if (limit < 1) throw ValidationError("depth limit must be at least 1");
    const int n = g.node_count();
    if (n < 2) throw ValidationError("all-pairs table needs at least two nodes");
    {
        const auto dist = g.bfs_distances(0);
        for (int v = 0; v < n; ++v)
            if (dist[static_cast<std::size_t>(v)] < 0)
                throw DisconnectedError("disconnected pair: no path from node 0 to node " +
                                        std::to_string(v));
    }
    const int workers = detail::resolve_thread_count(threads);
    const int depth = std::min(limit, n - 1);
    const int stride = depth + 1;

    std::vector<std::vector<std::uint64_t>> tallies(
        static_cast<std::size_t>(n - 1),
        std::vector<std::uint64_t>(static_cast<std::size_t>(n) * stride, 0));

    if (g.has_masks()) {
        const auto& adj = g.adjacency_masks();
        detail::run_tasks(n - 1, workers, [&](int s) {
            detail::MaskSourceSweep sweep(adj, s, depth, n,
                                          tallies[static_cast<std::size_t>(s)].data());
            sweep.search(s, std::uint64_t{1} << s, 0);
        });
    } else {
        detail::run_tasks(n - 1, workers, [&](int s) {
            detail::GenericSourceSweep sweep(g, s, depth,
                                             tallies[static_cast<std::size_t>(s)].data());
            sweep.run();
        });
    }

    std::vector<std::vector<std::vector<BigInt>>> counts(static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; ++i) {
        counts[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
        const auto& tally = tallies[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            auto& cell = counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            cell.assign(static_cast<std::size_t>(stride), BigInt(0));
            for (int len = 1; len <= depth; ++len)
                cell[static_cast<std::size_t>(len)] =
                    tally[static_cast<std::size_t>(j) * stride + len];
        }
    }
    return counts;
}

} // namespace pathdist

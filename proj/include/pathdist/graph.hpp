#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace pathdist {

struct NodePair {
    int source = 0;
    int target = 0;
};

// Simple undirected graph over dense node ids 0..N-1. Immutable after
// construction; safe to share across threads.
class Graph {
public:
    // Builds and validates. Self-loops are rejected; duplicate and reversed
    // duplicate edges collapse to one undirected edge. node_count may exceed
    // the largest endpoint to declare trailing isolated nodes.
    static Graph from_edges(int node_count, const std::vector<std::pair<int, int>>& edges) {
        if (node_count < 1) throw ValidationError("graph needs at least one node");
        Graph g;
        g.adj_.assign(static_cast<std::size_t>(node_count), {});
        for (const auto& [u, v] : edges) {
            if (u < 0 || v < 0 || u >= node_count || v >= node_count)
                throw ValidationError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                      ") out of range for " + std::to_string(node_count) + " nodes");
            if (u == v)
                throw ValidationError("self-loop at node " + std::to_string(u) + " not allowed");
            g.adj_[static_cast<std::size_t>(u)].push_back(v);
            g.adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        int degree_sum = 0;
        for (auto& nbrs : g.adj_) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
            degree_sum += static_cast<int>(nbrs.size());
        }
        g.edge_count_ = degree_sum / 2;
        if (node_count <= 64) {
            g.masks_.assign(static_cast<std::size_t>(node_count), 0);
            for (int v = 0; v < node_count; ++v)
                for (int w : g.adj_[static_cast<std::size_t>(v)])
                    g.masks_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
        }
        return g;
    }

    // Edge-list text: '#' comment lines, optional leading "N <count>" header,
    // then one "u v" pair per line. Node ids must be dense: every id below the
    // largest endpoint has to occur in some edge.
    static Graph parse_edge_list(std::istream& in) {
        std::vector<std::pair<int, int>> edges;
        long declared_n = -1;
        bool saw_content = false;
        std::string line;
        int line_no = 0;

        const auto parse_int = [&](const std::string& token) -> long {
            std::size_t used = 0;
            long value = 0;
            try {
                value = std::stol(token, &used);
            } catch (const std::exception&) {
                throw ValidationError("line " + std::to_string(line_no) +
                                      ": expected integer, got '" + token + "'");
            }
            if (used != token.size() || value < 0)
                throw ValidationError("line " + std::to_string(line_no) +
                                      ": expected non-negative integer, got '" + token + "'");
            if (value > max_node_id)
                throw ValidationError("line " + std::to_string(line_no) + ": node id " + token +
                                      " exceeds supported maximum " + std::to_string(max_node_id));
            return value;
        };

        while (std::getline(in, line)) {
            ++line_no;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;

            std::istringstream fields(line);
            std::vector<std::string> tokens;
            for (std::string tok; fields >> tok;) tokens.push_back(tok);

            if (!saw_content && tokens.size() == 2 && (tokens[0] == "N" || tokens[0] == "n")) {
                declared_n = parse_int(tokens[1]);
                if (declared_n < 1)
                    throw ValidationError("line " + std::to_string(line_no) +
                                          ": node count must be at least 1");
                saw_content = true;
                continue;
            }
            saw_content = true;
            if (tokens.size() != 2)
                throw ValidationError("line " + std::to_string(line_no) +
                                      ": expected 'u v', got '" + line + "'");
            const long u = parse_int(tokens[0]);
            const long v = parse_int(tokens[1]);
            if (u == v)
                throw ValidationError("line " + std::to_string(line_no) + ": self-loop '" +
                                      std::to_string(u) + " " + std::to_string(v) + "' not allowed");
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }

        long max_id = -1;
        for (const auto& [u, v] : edges) max_id = std::max({max_id, long{u}, long{v}});
        if (declared_n < 0 && max_id < 0)
            throw ValidationError("empty edge list: need at least one edge or an 'N <count>' header");
        if (declared_n >= 0 && max_id >= declared_n)
            throw ValidationError("node id " + std::to_string(max_id) +
                                  " conflicts with declared node count " + std::to_string(declared_n));
        const long n = declared_n >= 0 ? declared_n : max_id + 1;

        Graph g = from_edges(static_cast<int>(n), edges);
        // ids below the top edge endpoint must all be used; trailing isolated
        // nodes are reachable only through the header
        for (long v = 0; v <= max_id; ++v) {
            if (g.adj_[static_cast<std::size_t>(v)].empty())
                throw ValidationError("node id " + std::to_string(v) +
                                      " is never used: sparse ids are not supported");
        }
        return g;
    }

    static Graph parse_edge_list(std::string_view text) {
        std::istringstream in{std::string(text)};
        return parse_edge_list(in);
    }

    // "karate", "complete:<N>", "path:<N>", "cycle:<N>".
    static Graph builtin(std::string_view name);
    static std::string builtin_names() { return "karate, complete:<N>, path:<N>, cycle:<N>"; }

    int node_count() const noexcept { return static_cast<int>(adj_.size()); }
    int edge_count() const noexcept { return edge_count_; }

    const std::vector<int>& neighbors(int v) const {
        check_node(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const {
        const auto& nbrs = neighbors(u);
        check_node(v);
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    // One adjacency bitmask word per node; empty when node_count() > 64.
    const std::vector<std::uint64_t>& adjacency_masks() const noexcept { return masks_; }
    bool has_masks() const noexcept { return !masks_.empty(); }

    void check_node(int v) const {
        if (v < 0 || v >= node_count())
            throw ValidationError("node id " + std::to_string(v) + " out of range [0, " +
                                  std::to_string(node_count()) + ")");
    }

    void check_pair(NodePair pair) const {
        check_node(pair.source);
        check_node(pair.target);
    }

    // BFS hop counts from source; -1 marks unreachable nodes.
    std::vector<int> bfs_distances(int source) const {
        check_node(source);
        std::vector<int> dist(adj_.size(), -1);
        std::vector<int> queue;
        queue.reserve(adj_.size());
        dist[static_cast<std::size_t>(source)] = 0;
        queue.push_back(source);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            for (int w : adj_[static_cast<std::size_t>(v)]) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(w);
                }
            }
        }
        return dist;
    }

    bool is_connected() const {
        const auto dist = bfs_distances(0);
        return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
    }

    // Minimal number of edges on any source-target path; 0 when source == target.
    int shortest_path_length(NodePair pair) const {
        check_pair(pair);
        if (pair.source == pair.target) return 0;
        const auto dist = bfs_distances(pair.source);
        const int d = dist[static_cast<std::size_t>(pair.target)];
        if (d < 0)
            throw DisconnectedError("disconnected pair: no path from node " +
                                    std::to_string(pair.source) + " to node " +
                                    std::to_string(pair.target));
        return d;
    }

    // Writes the same format parse_edge_list() reads; the header keeps
    // trailing isolated nodes across a round trip.
    void write_edge_list(std::ostream& out) const {
        out << "N " << node_count() << '\n';
        for (int v = 0; v < node_count(); ++v)
            for (int w : adj_[static_cast<std::size_t>(v)])
                if (v < w) out << v << ' ' << w << '\n';
    }

    std::string edge_list_string() const {
        std::ostringstream out;
        write_edge_list(out);
        return out.str();
    }

    static constexpr long max_node_id = 50'000'000;

private:
    Graph() = default;

    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> masks_;
    int edge_count_ = 0;
};

namespace detail {

// Zachary's karate club, standard 0-indexed labelling (34 nodes, 78 edges).
inline const std::vector<std::pair<int, int>>& karate_edges() {
    static const std::vector<std::pair<int, int>> edges = {
        {0, 1},   {0, 2},   {0, 3},   {0, 4},   {0, 5},   {0, 6},
        {0, 7},   {0, 8},   {0, 10},  {0, 11},  {0, 12},  {0, 13},
        {0, 17},  {0, 19},  {0, 21},  {0, 31},  {1, 2},   {1, 3},
        {1, 7},   {1, 13},  {1, 17},  {1, 19},  {1, 21},  {1, 30},
        {2, 3},   {2, 7},   {2, 8},   {2, 9},   {2, 13},  {2, 27},
        {2, 28},  {2, 32},  {3, 7},   {3, 12},  {3, 13},  {4, 6},
        {4, 10},  {5, 6},   {5, 10},  {5, 16},  {6, 16},  {8, 30},
        {8, 32},  {8, 33},  {9, 33},  {13, 33}, {14, 32}, {14, 33},
        {15, 32}, {15, 33}, {18, 32}, {18, 33}, {19, 33}, {20, 32},
        {20, 33}, {22, 32}, {22, 33}, {23, 25}, {23, 27}, {23, 29},
        {23, 32}, {23, 33}, {24, 25}, {24, 27}, {24, 31}, {25, 31},
        {26, 29}, {26, 33}, {27, 33}, {28, 31}, {28, 33}, {29, 32},
        {29, 33}, {30, 32}, {30, 33}, {31, 32}, {31, 33}, {32, 33},
    };
    return edges;
}

inline int parse_builtin_order(std::string_view name, std::string_view arg) {
    std::size_t used = 0;
    long n = 0;
    try {
        n = std::stol(std::string(arg), &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != arg.size() || n < 1 || n > Graph::max_node_id)
        throw ValidationError("bad node count '" + std::string(arg) + "' for builtin '" +
                              std::string(name) + "'");
    return static_cast<int>(n);
}

} // namespace detail

inline Graph Graph::builtin(std::string_view name) {
    if (name == "karate") return from_edges(34, detail::karate_edges());

    const auto colon = name.find(':');
    const std::string_view family = name.substr(0, colon);
    const std::string_view arg = colon == std::string_view::npos ? "" : name.substr(colon + 1);
    std::vector<std::pair<int, int>> edges;

    if (family == "complete") {
        const int n = detail::parse_builtin_order(family, arg);
        if (n < 2) throw ValidationError("complete:<N> needs N >= 2");
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return from_edges(n, edges);
    }
    if (family == "path") {
        const int n = detail::parse_builtin_order(family, arg);
        for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
        return from_edges(n, edges);
    }
    if (family == "cycle") {
        const int n = detail::parse_builtin_order(family, arg);
        if (n < 3) throw ValidationError("cycle:<N> needs N >= 3");
        for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
        return from_edges(n, edges);
    }
    throw ValidationError("unknown builtin graph '" + std::string(name) + "'; valid names: " +
                          builtin_names());
}

} // namespace pathdist

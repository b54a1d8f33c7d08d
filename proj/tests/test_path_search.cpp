#include <catch2/catch_amalgamated.hpp>

#include <pathdist/path_search.hpp>
#include <pathdist/walk_counts.hpp>

#include "oracles.hpp"

using pathdist::BigInt;
using pathdist::count_paths_by_length;
using pathdist::enumerate_paths;
using pathdist::Graph;
using pathdist::ValidationError;

namespace {

// f_P(n) for karate (0,1), n = 1..18, frozen after cross-checking total and
// extremes against the brute-force oracle on reduced instances.
const std::vector<long> karate_paths_01 = {1,    7,    13,    39,   104,  418,  1212, 2722, 5198,
                                           8465, 12138, 15168, 15206, 11295, 5821, 1934, 366, 30};

} // namespace

TEST_CASE("karate (0,1) path counts match the frozen distribution") {
    const Graph g = Graph::builtin("karate");
    const auto dist = count_paths_by_length(g, {0, 1}, 18);

    REQUIRE(dist.limit == 18);
    CHECK(dist.shortest == 1);
    CHECK(dist.longest_found == 18);
    CHECK_FALSE(dist.exhausted); // 18 < N-1
    CHECK_FALSE(dist.below_shortest);
    for (int n = 1; n <= 18; ++n)
        CHECK(dist.counts[static_cast<std::size_t>(n)] ==
              karate_paths_01[static_cast<std::size_t>(n - 1)]);
    CHECK(dist.total() == 80137);
}

TEST_CASE("raising the karate limit to full depth changes nothing") {
    const Graph g = Graph::builtin("karate");
    const auto dist = count_paths_by_length(g, {0, 1}, 33);
    CHECK(dist.exhausted);
    CHECK(dist.total() == 80137);
    CHECK(dist.longest_found == 18);
    for (int n = 19; n <= 33; ++n) CHECK(dist.counts[static_cast<std::size_t>(n)] == 0);
}

TEST_CASE("karate (16,25) spans lengths 4..23 with 4319868 paths") {
    const Graph g = Graph::builtin("karate");
    const auto dist = count_paths_by_length(g, {16, 25}, 33);
    CHECK(dist.shortest == 4);
    CHECK(dist.longest_found == 23);
    CHECK(dist.total() == 4319868);
    CHECK(dist.counts[4] != 0);
    for (int n = 1; n < 4; ++n) CHECK(dist.counts[static_cast<std::size_t>(n)] == 0);
}

TEST_CASE("a two-edge path graph has one end-to-end path") {
    const Graph g = Graph::builtin("path:3");
    const auto dist = count_paths_by_length(g, {0, 2}, 2);
    CHECK(dist.counts[1] == 0);
    CHECK(dist.counts[2] == 1);
    CHECK(dist.exhausted);
    CHECK(dist.shortest == 2);
    CHECK(dist.longest_found == 2);
}

TEST_CASE("path search input validation") {
    const Graph g = Graph::builtin("karate");
    CHECK_THROWS_WITH(count_paths_by_length(g, {5, 5}, 3),
                      Catch::Matchers::ContainsSubstring("open walks"));
    CHECK_THROWS_AS(count_paths_by_length(g, {0, 1}, 0), ValidationError);
    CHECK_THROWS_AS(count_paths_by_length(g, {0, 99}, 3), ValidationError);
}

TEST_CASE("a limit below the shortest path is flagged, not failed") {
    const Graph g = Graph::builtin("karate");
    const auto dist = count_paths_by_length(g, {16, 25}, 3); // sPL is 4
    CHECK(dist.below_shortest);
    CHECK(dist.total() == 0);
    CHECK(dist.longest_found == 0);
}

TEST_CASE("path counts match the subset-permutation oracle") {
    std::mt19937 rng(20240818);
    for (int round = 0; round < 10; ++round) {
        const int n = 4 + static_cast<int>(rng() % 5); // 4..8 nodes
        const Graph g = oracle::random_connected_graph(rng, n, 0.35);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const auto dist = count_paths_by_length(g, {i, j}, n - 1);
                for (int len = 1; len <= n - 1; ++len)
                    REQUIRE(dist.counts[static_cast<std::size_t>(len)] ==
                            oracle::subset_permutation_path_count(g, i, j, len));
            }
        }
    }
}

TEST_CASE("path distributions are symmetric under pair reversal") {
    std::mt19937 rng(11);
    const Graph g = oracle::random_connected_graph(rng, 10, 0.3);
    for (int i = 0; i < 10; ++i) {
        for (int j = i + 1; j < 10; ++j) {
            const auto forward = count_paths_by_length(g, {i, j}, 9);
            const auto backward = count_paths_by_length(g, {j, i}, 9);
            CHECK(forward.counts == backward.counts);
        }
    }
}

TEST_CASE("counts at unpruned depths are final") {
    const Graph g = Graph::builtin("karate");
    const auto small = count_paths_by_length(g, {0, 1}, 6);
    const auto large = count_paths_by_length(g, {0, 1}, 14);
    for (int n = 1; n <= 6; ++n)
        CHECK(small.counts[static_cast<std::size_t>(n)] ==
              large.counts[static_cast<std::size_t>(n)]);
}

TEST_CASE("worker count does not change results") {
    const Graph g = Graph::builtin("karate");
    const auto one = count_paths_by_length(g, {16, 25}, 20, 1);
    const auto eight = count_paths_by_length(g, {16, 25}, 20, 8);
    CHECK(one.counts == eight.counts);
}

TEST_CASE("graphs beyond 64 nodes use the same arithmetic") {
    // the karate edges plus 31 isolated nodes force the non-bitmask engine;
    // isolated nodes are unreachable, so every count must be unchanged
    const Graph karate = Graph::builtin("karate");
    const Graph padded = Graph::parse_edge_list("N 65\n" + [] {
        std::string edges;
        const Graph g = Graph::builtin("karate");
        for (int v = 0; v < g.node_count(); ++v)
            for (int w : g.neighbors(v))
                if (v < w) edges += std::to_string(v) + " " + std::to_string(w) + "\n";
        return edges;
    }());
    REQUIRE_FALSE(padded.has_masks());
    REQUIRE(karate.has_masks());

    for (const auto [i, j] : {std::pair{0, 1}, {16, 25}, {5, 33}}) {
        const auto fast = count_paths_by_length(karate, {i, j}, 18);
        const auto generic = count_paths_by_length(padded, {i, j}, 18);
        CHECK(fast.counts == generic.counts);
    }
}

TEST_CASE("antipodal pair on an even cycle beyond 64 nodes") {
    const Graph g = Graph::builtin("cycle:70");
    const auto dist = count_paths_by_length(g, {0, 35}, 69);
    CHECK(dist.total() == 2); // the two arcs
    CHECK(dist.counts[35] == 2);
    CHECK(dist.shortest == 35);
    CHECK(dist.longest_found == 35);
}

TEST_CASE("enumerate_paths emits lexicographically ordered node sequences") {
    const Graph g = Graph::builtin("complete:4");
    std::vector<std::vector<int>> seen;
    const BigInt n = enumerate_paths(g, {0, 1}, 3, [&](const std::vector<int>& p) {
        seen.push_back(p);
    });
    const std::vector<std::vector<int>> expected = {
        {0, 1}, {0, 2, 1}, {0, 2, 3, 1}, {0, 3, 1}, {0, 3, 2, 1}};
    CHECK(n == 5);
    CHECK(seen == expected);
    CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("enumerate_paths emission count equals the counting search") {
    std::mt19937 rng(5);
    for (int round = 0; round < 6; ++round) {
        const Graph g = oracle::random_connected_graph(rng, 8, 0.3);
        const auto dist = count_paths_by_length(g, {0, 7}, 7);
        std::size_t emitted = 0;
        const BigInt n = enumerate_paths(g, {0, 7}, 7, [&](const std::vector<int>& p) {
            ++emitted;
            REQUIRE(p.front() == 0);
            REQUIRE(p.back() == 7);
        });
        CHECK(n == dist.total());
        CHECK(BigInt(static_cast<unsigned long>(emitted)) == n);
    }
}

TEST_CASE("path-walk domination and shortest-level equality") {
    const Graph g = Graph::builtin("karate");
    const auto paths = count_paths_by_length(g, {0, 1}, 18);
    const auto walks = pathdist::walk_counts(g, {0, 1}, 18);
    for (int n = 1; n <= 18; ++n)
        CHECK(paths.counts[static_cast<std::size_t>(n)] <=
              walks.counts[static_cast<std::size_t>(n)]);
    CHECK(paths.counts[1] == walks.counts[1]);
}

TEST_CASE("all-pairs raw counts agree with per-pair searches") {
    const Graph g = Graph::builtin("karate");
    const auto table = all_pairs_counts(g, 10);
    for (const auto [i, j] : {std::pair{0, 1}, {16, 25}, {2, 3}, {14, 15}, {0, 33}}) {
        const auto direct = count_paths_by_length(g, {i, j}, 10);
        const auto& cell = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        REQUIRE(cell.size() == 11);
        for (int n = 1; n <= 10; ++n)
            CHECK(cell[static_cast<std::size_t>(n)] ==
                  direct.counts[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("all-pairs rejects disconnected graphs by naming a pair") {
    const Graph g = Graph::parse_edge_list("0 1\n2 3\n");
    CHECK_THROWS_AS(pathdist::all_pairs_counts(g, 3), pathdist::DisconnectedError);
}

#include <catch2/catch_amalgamated.hpp>

#include <pathdist/complete_graph.hpp>
#include <pathdist/path_search.hpp>

using pathdist::BigInt;
using pathdist::complete_distribution;
using pathdist::complete_path_count;
using pathdist::Graph;
using pathdist::ValidationError;

TEST_CASE("closed-form path counts for K10") {
    CHECK(complete_path_count(10, 1) == 1);
    CHECK(complete_path_count(10, 2) == 8);
    CHECK(complete_path_count(10, 3) == 8 * 7);
    CHECK(complete_path_count(10, 9) == 40320); // 8!
    CHECK(complete_path_count(10, 10) == 0);
    CHECK(complete_path_count(10, 42) == 0);
}

TEST_CASE("closed form at the smallest orders") {
    CHECK(complete_path_count(2, 1) == 1);
    CHECK(complete_path_count(2, 2) == 0);
    CHECK(complete_path_count(3, 1) == 1);
    CHECK(complete_path_count(3, 2) == 1);
}

TEST_CASE("closed form rejects bad arguments") {
    CHECK_THROWS_AS(complete_path_count(1, 1), ValidationError);
    CHECK_THROWS_AS(complete_path_count(5, 0), ValidationError);
    CHECK_THROWS_AS(complete_path_count(5, -2), ValidationError);
    CHECK_THROWS_AS(complete_distribution(1), ValidationError);
}

TEST_CASE("small analytic distributions by hand") {
    const auto k3 = complete_distribution(3);
    CHECK(k3.counts == std::vector<BigInt>{0, 1, 1});

    const auto k4 = complete_distribution(4);
    CHECK(k4.counts == std::vector<BigInt>{0, 1, 2, 2});

    const auto k5 = complete_distribution(5);
    CHECK(k5.counts == std::vector<BigInt>{0, 1, 3, 6, 6});

    CHECK(k5.exhausted);
    CHECK(k5.shortest == 1);
    CHECK(k5.longest_found == 4);
    CHECK(k5.limit == 4);
}

TEST_CASE("the two longest lengths are always tied for most frequent") {
    for (int n = 3; n <= 12; ++n) {
        const auto dist = complete_distribution(n);
        CHECK(dist.counts[static_cast<std::size_t>(n - 1)] ==
              dist.counts[static_cast<std::size_t>(n - 2)]);
        // and they dominate every shorter length
        for (int len = 1; len < n - 2; ++len)
            CHECK(dist.counts[static_cast<std::size_t>(len)] <
                  dist.counts[static_cast<std::size_t>(n - 1)]);
    }
}

TEST_CASE("analytic distribution equals exhaustive search for N up to 9") {
    for (int n = 2; n <= 9; ++n) {
        const auto analytic = complete_distribution(n);
        const Graph g = Graph::builtin("complete:" + std::to_string(n));
        const auto searched = pathdist::count_paths_by_length(g, {0, 1}, n - 1);
        REQUIRE(analytic.counts.size() == searched.counts.size());
        for (std::size_t idx = 0; idx < analytic.counts.size(); ++idx)
            CHECK(analytic.counts[idx] == searched.counts[idx]);
    }
}

TEST_CASE("total paths follow the falling-factorial sum") {
    for (int n = 2; n <= 8; ++n) {
        // sum over k of (n-2)!/(n-2-k)!
        BigInt expected = 0;
        BigInt term = 1;
        for (int k = 0; k <= n - 2; ++k) {
            expected += term;
            term *= (n - 2) - k;
        }
        CHECK(complete_distribution(n).total() == expected);
    }
}

TEST_CASE("walks and paths coincide at length one on complete graphs") {
    const Graph g = Graph::builtin("complete:10");
    const auto walks = pathdist::walk_counts(g, {0, 1}, 3);
    CHECK(walks.counts[1] == 1);
    CHECK(walks.counts[1] == complete_path_count(10, 1));
}

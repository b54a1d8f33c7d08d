// Walk/path length profile for one node pair, printed as a small report.
// Usage: pair_report [source] [target]   (defaults: 0 1, karate graph)

#include <cstdlib>
#include <iostream>

#include <pathdist/pathdist.hpp>

int main(int argc, char** argv) {
    using namespace pathdist;

    const int source = argc > 1 ? std::atoi(argv[1]) : 0;
    const int target = argc > 2 ? std::atoi(argv[2]) : 1;

    const Graph g = Graph::builtin("karate");
    const NodePair pair{source, target};
    const int spl = g.shortest_path_length(pair);
    const int limit = g.node_count() - 1;

    const auto paths = count_paths_by_length(g, pair, limit);
    const auto walks = walk_counts(g, pair, paths.longest_found);
    const auto stats = summarize(paths);

    std::cout << "pair (" << source << ", " << target << ") on karate: spl=" << spl
              << " longest=" << paths.longest_found << " total=" << stats.total_paths.get_str()
              << " mean=" << decimal_string(stats.mean_length, 3)
              << " mode=" << stats.mode_length << "\n\n";

    std::cout << "len   paths            walks\n";
    for (int n = 1; n <= paths.longest_found; ++n) {
        std::cout << n << (n < 10 ? "     " : "    ") << paths.count(n).get_str();
        for (std::size_t pad = paths.count(n).get_str().size(); pad < 17; ++pad) std::cout << ' ';
        std::cout << walks.count(n).get_str() << '\n';
    }

    std::cout << "\nk-th order expectations (paths vs walks):\n";
    const auto series = walk_counts(g, pair, spl + 8);
    for (int k = 0; k <= 8; ++k) {
        const auto dist = count_paths_by_length(g, pair, spl + k);
        std::cout << "k=" << k << "  E_paths=" << decimal_string(truncated_expected_path_length(dist, k), 6)
                  << "  E_walks=" << decimal_string(truncated_expected_walk_length(series, k), 6)
                  << '\n';
    }
    return 0;
}

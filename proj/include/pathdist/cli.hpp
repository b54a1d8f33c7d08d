#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "complete_graph.hpp"
#include "emit.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "path_search.hpp"
#include "stats.hpp"
#include "walk_counts.hpp"

namespace pathdist {

namespace detail {

// "--graph <path|builtin:NAME>"
inline Graph load_graph(const std::string& spec) {
    constexpr std::string_view prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) return Graph::builtin(spec.substr(prefix.size()));
    std::ifstream in(spec);
    if (!in) throw ValidationError("cannot open graph file '" + spec + "'");
    return Graph::parse_edge_list(in);
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = nullptr;

    explicit OutputTarget(const std::string& path) {
        if (path.empty()) {
            stream = &std::cout;
            return;
        }
        file.open(path);
        if (!file) throw ValidationError("cannot open output file '" + path + "'");
        stream = &file;
    }
};

struct CommonFlags {
    std::string graph;
    std::string format = "csv";
    std::string output;
    int threads = 0;
    bool exact = false;
    int digits = 6;

    RenderOptions render_options() const {
        if (digits < 0 || digits > 50)
            throw ValidationError("digits must be between 0 and 50");
        return RenderOptions{parse_format(format), exact, digits};
    }
};

inline void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool needs_graph = true) {
    auto* graph_opt = cmd->add_option("--graph", flags.graph,
                                      "graph source: edge-list file or builtin:<name> "
                                      "(karate, complete:<N>, path:<N>, cycle:<N>)");
    if (needs_graph) graph_opt->required();
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", flags.output, "write to this file instead of standard output");
    cmd->add_option("--threads", flags.threads, "worker cap; 0 = all available cores")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--exact", flags.exact, "print rationals as numerator/denominator");
    cmd->add_option("--digits", flags.digits, "fractional digits for decimal rendering")
        ->capture_default_str();
}

} // namespace detail

// Exit codes: 0 success, 2 usage or validation problem, 3 structurally
// impossible request (disconnected pair / graph).
inline int run_cli(std::vector<std::string> args) {
    CLI::App app{"exact walk and simple-path length distributions for node pairs"};
    app.require_subcommand(1);

    // --- pairdist ---------------------------------------------------------
    auto* pairdist = app.add_subcommand(
        "pairdist", "per-length path (and optionally walk) counts for one pair");
    detail::CommonFlags pd_flags;
    detail::add_common_flags(pairdist, pd_flags);
    int pd_source = 0;
    int pd_target = 0;
    int pd_limit = 0;
    int pd_k = 0;
    bool pd_walks = false;
    pairdist->add_option("-s,--source", pd_source, "source node id")->required();
    pairdist->add_option("-t,--target", pd_target, "target node id")->required();
    auto* pd_limit_opt = pairdist->add_option("--limit", pd_limit, "depth bound on path length");
    auto* pd_k_opt =
        pairdist->add_option("--k", pd_k, "approximation order; bound becomes sPL + k");
    pd_limit_opt->excludes(pd_k_opt);
    pairdist->add_flag("--include-walks", pd_walks, "add the walk-count column");

    pairdist->callback([&] {
        if (!*pd_limit_opt && !*pd_k_opt)
            throw ValidationError("exactly one of --limit or --k is required");
        const Graph g = detail::load_graph(pd_flags.graph);
        const NodePair pair{pd_source, pd_target};
        g.check_pair(pair);
        if (pd_source == pd_target)
            throw ValidationError("paths are open walks: source and target must differ");
        int limit = pd_limit;
        if (*pd_k_opt) {
            if (pd_k < 0) throw ValidationError("k must be non-negative");
            limit = g.shortest_path_length(pair) + pd_k;
        }
        const auto dist = count_paths_by_length(g, pair, limit, pd_flags.threads);
        std::optional<WalkCountSeries> walks;
        if (pd_walks) walks = walk_counts(g, pair, limit);
        detail::OutputTarget out(pd_flags.output);
        emit_pair_distribution(*out.stream, dist, walks ? &*walks : nullptr,
                               pd_flags.render_options());
    });

    // --- converge ---------------------------------------------------------
    auto* converge = app.add_subcommand(
        "converge", "k-th order expectations and deltas with early-stop detection");
    detail::CommonFlags cv_flags;
    detail::add_common_flags(converge, cv_flags);
    int cv_source = 0;
    int cv_target = 0;
    int cv_k_max = -1;
    std::string cv_epsilon = "1e-6";
    converge->add_option("-s,--source", cv_source, "source node id")->required();
    converge->add_option("-t,--target", cv_target, "target node id")->required();
    converge->add_option("--epsilon", cv_epsilon, "successive-change stop threshold")
        ->capture_default_str();
    converge->add_option("--k-max", cv_k_max,
                         "largest approximation order to scan; the default N-sPL "
                         "reaches one step past the last possible path length, "
                         "where saturation becomes an exact zero change");

    converge->callback([&] {
        const Graph g = detail::load_graph(cv_flags.graph);
        const NodePair pair{cv_source, cv_target};
        g.check_pair(pair);
        if (cv_source == cv_target)
            throw ValidationError("paths are open walks: source and target must differ");
        const Rational epsilon = parse_rational(cv_epsilon);
        const int spl = g.shortest_path_length(pair);
        const int k_max = cv_k_max >= 0 ? cv_k_max : std::max(g.node_count() - spl, 1);

        const auto report = convergence_scan(g, pair, epsilon, k_max, cv_flags.threads);
        const int k_last = report.entries.back().k;
        const auto series = walk_counts(g, pair, spl + std::max(k_last, 1));

        std::vector<ConvergenceRow> rows;
        rows.reserve(report.entries.size());
        for (const auto& entry : report.entries) {
            ConvergenceRow row;
            row.k = entry.k;
            row.expected_paths = entry.expected_length;
            row.delta_paths = entry.delta;
            row.expected_walks = truncated_expected_walk_length(series, entry.k);
            row.delta_walks = walk_delta_measure(series, entry.k);
            rows.push_back(std::move(row));
        }
        detail::OutputTarget out(cv_flags.output);
        emit_convergence(*out.stream, pair, spl, cv_epsilon, k_max, rows, report.converged_at_k,
                         cv_flags.render_options());
    });

    // --- allpairs ---------------------------------------------------------
    auto* allpairs =
        app.add_subcommand("allpairs", "summary statistics for every unordered node pair");
    detail::CommonFlags ap_flags;
    detail::add_common_flags(allpairs, ap_flags);
    int ap_limit = -1;
    allpairs->add_option("--limit", ap_limit, "depth bound on path length; default N-1");

    allpairs->callback([&] {
        const Graph g = detail::load_graph(ap_flags.graph);
        const int limit = ap_limit >= 0 ? ap_limit : std::max(g.node_count() - 1, 1);
        const auto rows = all_pairs_stats(g, limit, ap_flags.threads);
        detail::OutputTarget out(ap_flags.output);
        emit_all_pairs(*out.stream, rows, limit, ap_flags.render_options());
    });

    // --- oracle -----------------------------------------------------------
    auto* oracle = app.add_subcommand(
        "oracle", "analytic per-length path counts for a pair in the complete graph");
    detail::CommonFlags or_flags;
    detail::add_common_flags(oracle, or_flags, /*needs_graph=*/false);
    int or_nodes = 0;
    oracle->add_option("-n,--nodes", or_nodes, "order N of the complete graph")->required();

    oracle->callback([&] {
        const auto dist = complete_distribution(or_nodes);
        detail::OutputTarget out(or_flags.output);
        emit_pair_distribution(*out.stream, dist, nullptr, or_flags.render_options());
    });

    // --- export-builtin ---------------------------------------------------
    auto* exporter =
        app.add_subcommand("export-builtin", "write a builtin graph as an edge-list file");
    detail::CommonFlags ex_flags;
    detail::add_common_flags(exporter, ex_flags);

    exporter->callback([&] {
        constexpr std::string_view prefix = "builtin:";
        if (ex_flags.graph.rfind(prefix, 0) != 0)
            throw ValidationError("export-builtin requires --graph builtin:<name>");
        const Graph g = Graph::builtin(ex_flags.graph.substr(prefix.size()));
        detail::OutputTarget out(ex_flags.output);
        g.write_edge_list(*out.stream);
    });

    try {
        std::reverse(args.begin(), args.end()); // CLI11 consumes from the back
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const DisconnectedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

inline int run_cli(int argc, char** argv) {
    return run_cli(std::vector<std::string>(argv + 1, argv + argc));
}

} // namespace pathdist

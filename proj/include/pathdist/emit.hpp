#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "numeric.hpp"
#include "path_search.hpp"
#include "stats.hpp"
#include "walk_counts.hpp"

namespace pathdist {

enum class Format { csv, json };

inline Format parse_format(std::string_view text) {
    if (text == "csv") return Format::csv;
    if (text == "json") return Format::json;
    throw ValidationError("unknown format '" + std::string(text) + "'; expected csv or json");
}

struct RenderOptions {
    Format format = Format::csv;
    bool exact = false; // rationals as "numerator/denominator" instead of decimal
    int digits = 6;     // fractional digits of the decimal rendering
};

inline std::string render(const Rational& value, const RenderOptions& options) {
    return options.exact ? fraction_string(value) : decimal_string(value, options.digits);
}

// Per-length table for one pair: path counts, optionally joined with walk
// counts over the same lengths. Counts are emitted as exact decimal strings
// in both formats; CSV carries the summary fields as '#' trailer lines.
inline void emit_pair_distribution(std::ostream& out, const PathLengthDistribution& dist,
                                   const WalkCountSeries* walks, const RenderOptions& options) {
    if (walks && walks->max_len < dist.limit)
        throw ValidationError("walk series shorter than the path distribution");

    if (options.format == Format::csv) {
        out << (walks ? "length,path_count,walk_count\n" : "length,path_count\n");
        for (int n = 1; n <= dist.limit; ++n) {
            out << n << ',' << dist.counts[static_cast<std::size_t>(n)].get_str();
            if (walks) out << ',' << walks->counts[static_cast<std::size_t>(n)].get_str();
            out << '\n';
        }
        out << "# spl=" << dist.shortest << '\n';
        out << "# longest_found=" << dist.longest_found << '\n';
        out << "# total_paths=" << dist.total().get_str() << '\n';
        if (walks) out << "# total_walks=" << walks->total().get_str() << '\n';
        return;
    }

    nlohmann::ordered_json doc;
    doc["source"] = dist.pair.source;
    doc["target"] = dist.pair.target;
    doc["spl"] = dist.shortest;
    doc["limit"] = dist.limit;
    doc["rows"] = nlohmann::ordered_json::array();
    for (int n = 1; n <= dist.limit; ++n) {
        nlohmann::ordered_json row;
        row["length"] = n;
        row["paths"] = dist.counts[static_cast<std::size_t>(n)].get_str();
        if (walks) row["walks"] = walks->counts[static_cast<std::size_t>(n)].get_str();
        doc["rows"].push_back(std::move(row));
    }
    doc["total_paths"] = dist.total().get_str();
    doc["longest_found"] = dist.longest_found;
    if (walks) doc["total_walks"] = walks->total().get_str();
    out << doc.dump(2) << '\n';
}

struct ConvergenceRow {
    int k = 0;
    Rational expected_paths;
    Rational delta_paths;
    Rational expected_walks;
    Rational delta_walks;
};

inline void emit_convergence(std::ostream& out, NodePair pair, int spl,
                             const std::string& epsilon_text, int k_max,
                             const std::vector<ConvergenceRow>& rows,
                             std::optional<int> converged_at_k, const RenderOptions& options) {
    if (options.format == Format::csv) {
        out << "k,expected_paths,delta_paths,expected_walks,delta_walks\n";
        for (const auto& row : rows) {
            out << row.k << ',' << render(row.expected_paths, options) << ','
                << render(row.delta_paths, options) << ',' << render(row.expected_walks, options)
                << ',' << render(row.delta_walks, options) << '\n';
        }
        out << "# spl=" << spl << '\n';
        out << "# epsilon=" << epsilon_text << '\n';
        out << "# k_max=" << k_max << '\n';
        out << "# converged_at_k=" << (converged_at_k ? std::to_string(*converged_at_k) : "none")
            << '\n';
        return;
    }

    nlohmann::ordered_json doc;
    doc["source"] = pair.source;
    doc["target"] = pair.target;
    doc["spl"] = spl;
    doc["epsilon"] = epsilon_text;
    doc["k_max"] = k_max;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json item;
        item["k"] = row.k;
        item["expected_paths"] = render(row.expected_paths, options);
        item["delta_paths"] = render(row.delta_paths, options);
        item["expected_walks"] = render(row.expected_walks, options);
        item["delta_walks"] = render(row.delta_walks, options);
        doc["rows"].push_back(std::move(item));
    }
    if (converged_at_k)
        doc["converged_at_k"] = *converged_at_k;
    else
        doc["converged_at_k"] = nullptr;
    out << doc.dump(2) << '\n';
}

inline void emit_all_pairs(std::ostream& out, const std::vector<PairStats>& rows, int limit,
                           const RenderOptions& options) {
    if (options.format == Format::csv) {
        out << "i,j,total_paths,min_len,max_len,mean_len,mode_len\n";
        for (const auto& row : rows) {
            out << row.pair.source << ',' << row.pair.target << ',' << row.total_paths.get_str()
                << ',' << row.min_length << ',' << row.max_length << ','
                << render(row.mean_length, options) << ',' << row.mode_length << '\n';
        }
        out << "# limit=" << limit << '\n';
        return;
    }

    nlohmann::ordered_json doc;
    doc["limit"] = limit;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json item;
        item["i"] = row.pair.source;
        item["j"] = row.pair.target;
        item["total_paths"] = row.total_paths.get_str();
        item["min_len"] = row.min_length;
        item["max_len"] = row.max_length;
        item["mean_len"] = render(row.mean_length, options);
        item["mode_len"] = row.mode_length;
        doc["rows"].push_back(std::move(item));
    }
    out << doc.dump(2) << '\n';
}

} // namespace pathdist

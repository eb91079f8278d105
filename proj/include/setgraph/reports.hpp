#pragma once

#include <setgraph/config.hpp>
#include <setgraph/core.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace setgraph
{
    enum class GraphFormat
    {
        dot,
        json,
        csv
    };

    auto parse_graph_format(const std::string & text) -> GraphFormat;

    /**
     * Serialized G_{A^(n)}. DOT nodes are v_<s>_<i> labelled with the subset;
     * CSV has one "u,v" mask pair per edge with u < v, sorted; JSON is
     * {n, vertices: [{label, mask}], edges: [[u, v]]} with edges as masks.
     */
    auto export_graph(GroundSize n, GraphFormat format, const Config & config = {}) -> std::string;

    /// Inverse of the JSON export: adjacency rebuilt from the edge list.
    auto parse_graph_json(const std::string & text) -> std::pair<unsigned, BitRows>;

    /// All invariants of G_{A^(n)} as JSON; oracle-only fields above their caps are null with a reason.
    auto invariant_report(GroundSize n, const Config & config = {}) -> std::string;

    enum class Metric
    {
        vertices,
        edges,
        holes,
        degree_min,
        degree_max,
        mela
    };

    auto parse_metric(const std::string & text) -> Metric;
    auto metric_name(Metric m) -> const char *;

    /// (n, value) for n = 1..max_n.
    auto sequence(Metric metric, unsigned max_n, const Config & config = {}) -> std::vector<std::pair<unsigned, std::uint64_t>>;

    /// "n,value" lines under a header.
    auto render_sequence(Metric metric, const std::vector<std::pair<unsigned, std::uint64_t>> & rows) -> std::string;

    /// CSV rows "label,mask,value" for the degree sequence or the tightness vector.
    auto degree_csv(GroundSize n) -> std::string;
    auto tightness_csv(GroundSize n) -> std::string;

    /// HoleReport as JSON.
    auto hole_report_json(GroundSize n, const Config & config = {}) -> std::string;
}

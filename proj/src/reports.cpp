#include <setgraph/error.hpp>
#include <setgraph/holes.hpp>
#include <setgraph/invariants.hpp>
#include <setgraph/mela.hpp>
#include <setgraph/parameters.hpp>
#include <setgraph/reports.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>

using json = nlohmann::ordered_json;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace setgraph
{
    namespace
    {
        auto node_id(const SetGraphSpec & spec, SubsetMask m) -> string
        {
            auto l = spec.label_of(m);
            return "v_" + to_string(l.s) + "_" + to_string(l.i);
        }

        auto sorted_mask_edges(const MaterializedGraph & g) -> vector<std::pair<uint64_t, uint64_t>>
        {
            vector<std::pair<uint64_t, uint64_t>> edges;
            for (std::size_t u = 0; u < g.size(); ++u)
                for (std::size_t v = u + 1; v < g.size(); ++v)
                    if (g.adjacent(u, v)) {
                        auto a = g.mask(u).bits, b = g.mask(v).bits;
                        edges.emplace_back(std::min(a, b), std::max(a, b));
                    }
            std::sort(edges.begin(), edges.end());
            return edges;
        }
    }

    auto parse_graph_format(const string & text) -> GraphFormat
    {
        if (text == "dot")
            return GraphFormat::dot;
        if (text == "json")
            return GraphFormat::json;
        if (text == "csv")
            return GraphFormat::csv;
        throw InvalidArgument("unknown graph format '" + text + "' (expected dot, json or csv)");
    }

    auto export_graph(GroundSize n, GraphFormat format, const Config & config) -> string
    {
        auto g = materialize(n, config.materialize_cap);
        const auto & spec = g.spec();
        std::ostringstream out;

        switch (format) {
            case GraphFormat::dot:
                out << "graph setgraph_" << n.value() << " {\n";
                for (auto m : g.masks())
                    out << "  " << node_id(spec, m) << " [label=\"" << subset_string(m) << "\"];\n";
                for (std::size_t u = 0; u < g.size(); ++u)
                    for (std::size_t v = u + 1; v < g.size(); ++v)
                        if (g.adjacent(u, v))
                            out << "  " << node_id(spec, g.mask(u)) << " -- " << node_id(spec, g.mask(v)) << ";\n";
                out << "}\n";
                break;

            case GraphFormat::csv:
                for (auto [u, v] : sorted_mask_edges(g))
                    out << u << ',' << v << '\n';
                break;

            case GraphFormat::json: {
                json doc;
                doc["n"] = n.value();
                doc["order_version"] = config.order_version;
                json vertices = json::array();
                for (auto m : g.masks())
                    vertices.push_back({{"label", node_id(spec, m)}, {"mask", m.bits}, {"subset", subset_string(m)}});
                doc["vertices"] = std::move(vertices);
                json edges = json::array();
                for (auto [u, v] : sorted_mask_edges(g))
                    edges.push_back({u, v});
                doc["edges"] = std::move(edges);
                out << doc.dump(2) << '\n';
                break;
            }
        }
        return out.str();
    }

    auto parse_graph_json(const string & text) -> std::pair<unsigned, BitRows>
    {
        json doc;
        try {
            doc = json::parse(text);
        }
        catch (const json::exception & e) {
            throw InvalidArgument(string("malformed graph JSON: ") + e.what());
        }
        GroundSize n{doc.at("n").get<unsigned>()};
        SetGraphSpec spec{n};
        BitRows rows(spec.vertex_count());
        for (const auto & e : doc.at("edges")) {
            auto u = spec.index_of(SubsetMask::checked(n, e.at(0).get<uint64_t>()));
            auto v = spec.index_of(SubsetMask::checked(n, e.at(1).get<uint64_t>()));
            rows.set(u, v);
            rows.set(v, u);
        }
        return {n.value(), std::move(rows)};
    }

    auto invariant_report(GroundSize n, const Config & config) -> string
    {
        config.validate();
        const auto k = n.value();
        json doc;
        json reasons = json::object();
        auto oracle_field = [&] (const char * name, unsigned cap, auto && compute) -> json {
            if (k > cap) {
                reasons[name] = "n=" + to_string(k) + " above the oracle cap n<=" + to_string(cap);
                return nullptr;
            }
            return compute();
        };

        doc["n"] = k;
        doc["order_version"] = config.order_version;
        doc["vertices"] = vertex_count(n);
        doc["edges"] = edge_count_closed(n);
        doc["edges_recursive"] = edge_count_recursive(n);
        auto extremes = degree_extremes(n);
        doc["degree_min"] = extremes.min;
        doc["degree_max"] = extremes.max;
        json classes = json::array();
        for (unsigned s = 1; s <= k; ++s)
            classes.push_back({{"cardinality", s}, {"vertices", binomial(k, s)}, {"degree", degree_closed(n, s)}});
        doc["degree_by_cardinality"] = std::move(classes);
        doc["tightness_sum"] = degree_sum_closed(n);

        auto tri_cap = std::min(config.triangle_cap, config.materialize_cap);
        doc["h_exact"] = oracle_field("h_exact", tri_cap, [&] {
            return json(triangle_count_exact(materialize(n, config.materialize_cap), config.threads));
        });
        if (k <= config.holes_cap)
            doc["h_corrected"] = triangle_count_corrected(n);
        else {
            doc["h_corrected"] = nullptr;
            reasons["h_corrected"] = "hole recursion limited to n<=" + to_string(config.holes_cap);
        }
        if (k >= 2)
            doc["h_paper_formula"] = triangle_count_paper(n);
        else {
            doc["h_paper_formula"] = nullptr;
            reasons["h_paper_formula"] = "stated recursion starts at n=2";
        }
        doc["apex_primitive_degree"] = apex_primitive_degree(n);

        doc["clique_number"] = clique_number(n);
        doc["chromatic_number"] = pow2(k - 1);
        doc["chromatic_colouring_proper"] = oracle_field("chromatic_colouring_proper", 12, [&] {
            auto c = chromatic_coloring(n);
            return json(is_proper(c) && c.colour_count == clique_number(n));
        });
        doc["independence_number"] = independence_number(n).value;
        doc["domination_number"] = domination(n).value;
        if (k >= 2)
            doc["bondage_number"] = bondage_number(n).value;
        else {
            doc["bondage_number"] = nullptr;
            reasons["bondage_number"] = "no edges at n=1";
        }
        doc["mcpherson_number"] = mcpherson_number(n);

        auto graph = [&] { return materialize(n, config.materialize_cap); };
        json oracles;
        oracles["maximum_clique_count"] = oracle_field("oracle.maximum_clique_count", config.oracle.cliques, [&] {
            return json(max_cliques(graph()).cliques.size());
        });
        oracles["chromatic"] = oracle_field("oracle.chromatic", config.oracle.chromatic, [&] { return json(chromatic_oracle(graph())); });
        oracles["independence"] = oracle_field("oracle.independence", config.oracle.independence, [&] { return json(independence_oracle(graph())); });
        oracles["domination"] = oracle_field("oracle.domination", config.oracle.domination, [&] { return json(domination_oracle(graph()).value); });
        if (k >= 2)
            oracles["bondage"] = oracle_field("oracle.bondage", config.oracle.bondage, [&] {
                auto b = bondage_oracle(graph());
                return b ? json(b->value) : json(nullptr);
            });
        else {
            oracles["bondage"] = nullptr;
            reasons["oracle.bondage"] = "no edges at n=1";
        }
        oracles["mcpherson"] = oracle_field("oracle.mcpherson", config.oracle.vertex_cover, [&] { return json(mcpherson_oracle(graph())); });
        doc["oracle"] = std::move(oracles);

        json witnesses;
        auto masks_json = [] (const vector<SubsetMask> & ms) {
            json a = json::array();
            for (auto m : ms)
                a.push_back({{"mask", m.bits}, {"subset", subset_string(m)}});
            return a;
        };
        witnesses["independent_set"] = masks_json(independence_number(n).witness);
        witnesses["dominating_set"] = masks_json(domination(n).witness);
        if (k >= 2) {
            auto b = bondage_number(n);
            witnesses["bondage_edge"] = masks_json({b.edge.first, b.edge.second});
        }
        if (k <= 12)
            witnesses["maximum_clique"] = masks_json(clique_witness(n));
        doc["witnesses"] = std::move(witnesses);
        doc["null_reasons"] = std::move(reasons);
        return doc.dump(2) + "\n";
    }

    auto parse_metric(const string & text) -> Metric
    {
        for (auto m : {Metric::vertices, Metric::edges, Metric::holes, Metric::degree_min, Metric::degree_max, Metric::mela})
            if (text == metric_name(m))
                return m;
        throw InvalidArgument("unknown metric '" + text + "'");
    }

    auto metric_name(Metric m) -> const char *
    {
        switch (m) {
            case Metric::vertices: return "vertices";
            case Metric::edges: return "edges";
            case Metric::holes: return "holes";
            case Metric::degree_min: return "degree_min";
            case Metric::degree_max: return "degree_max";
            case Metric::mela: return "mela";
        }
        return "?";
    }

    auto sequence(Metric metric, unsigned max_n, const Config & config) -> vector<std::pair<unsigned, uint64_t>>
    {
        auto cap = metric == Metric::holes ? std::min(config.holes_cap, max_holes_n) : std::min(config.count_cap, max_count_n);
        if (max_n < 1 || max_n > cap)
            throw RangeError(string(metric_name(metric)) + " sequence limited to 1.." + to_string(cap));

        vector<std::pair<unsigned, uint64_t>> rows;
        for (unsigned k = 1; k <= max_n; ++k) {
            GroundSize n{k};
            uint64_t value = 0;
            switch (metric) {
                case Metric::vertices: value = vertex_count(n); break;
                case Metric::edges: value = edge_count_closed(n); break;
                case Metric::holes: value = triangle_count_corrected(n); break;
                case Metric::degree_min: value = degree_extremes(n).min; break;
                case Metric::degree_max: value = degree_extremes(n).max; break;
                case Metric::mela: value = mela(k).at(k); break;
            }
            rows.emplace_back(k, value);
        }
        return rows;
    }

    auto render_sequence(Metric metric, const vector<std::pair<unsigned, uint64_t>> & rows) -> string
    {
        std::ostringstream out;
        out << "n," << metric_name(metric) << '\n';
        for (auto [n, v] : rows)
            out << n << ',' << v << '\n';
        return out.str();
    }

    namespace
    {
        auto vertex_csv(GroundSize n, const vector<uint64_t> & values, const char * column) -> string
        {
            SetGraphSpec spec{n};
            std::ostringstream out;
            out << "label,mask," << column << '\n';
            auto masks = spec.masks();
            for (std::size_t v = 0; v < masks.size(); ++v)
                out << node_id(spec, masks[v]) << ',' << masks[v].bits << ',' << values[v] << '\n';
            return out.str();
        }
    }

    auto degree_csv(GroundSize n) -> string
    {
        return vertex_csv(n, degree_profile(n).sequence, "degree");
    }

    auto tightness_csv(GroundSize n) -> string
    {
        return vertex_csv(n, tightness_vector(n).values, "tightness");
    }

    auto hole_report_json(GroundSize n, const Config & config) -> string
    {
        HoleOptions options{std::min(config.triangle_cap, config.materialize_cap), config.materialize_cap, config.threads};
        auto r = hole_report(n, options);
        auto opt = [] (const std::optional<uint64_t> & v) { return v ? json(*v) : json(nullptr); };
        json histogram = json::array();
        for (auto [degree, count] : r.primitive_degree_histogram)
            histogram.push_back({{"primitive_degree", degree}, {"vertices", count}});
        json doc;
        doc["n"] = r.n;
        doc["h_exact"] = opt(r.h_exact);
        doc["h_paper_formula"] = opt(r.h_paper_formula);
        doc["h_corrected"] = opt(r.h_corrected);
        doc["apex_primitive_degree"] = r.apex_primitive_degree;
        doc["primitive_degree_histogram"] = r.h_exact ? std::move(histogram) : json(nullptr);
        return doc.dump(2) + "\n";
    }
}

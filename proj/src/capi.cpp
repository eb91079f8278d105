#include <setgraph/setgraph.h>

#include <setgraph/config.hpp>
#include <setgraph/error.hpp>
#include <setgraph/holes.hpp>
#include <setgraph/invariants.hpp>
#include <setgraph/reports.hpp>
#include <setgraph/verify.hpp>

#include <functional>
#include <map>
#include <string>

struct sg_config
{
    setgraph::Config value;
};

struct sg_graph
{
    setgraph::MaterializedGraph value;
};

struct sg_text
{
    std::string value;
};

namespace
{
    thread_local std::string last_error;

    auto fail(sg_status status, const std::string & message) -> sg_status
    {
        last_error = message;
        return status;
    }

    template <typename F>
    auto guarded(F && f) noexcept -> sg_status
    {
        try {
            f();
            return SG_OK;
        }
        catch (const setgraph::RangeError & e) {
            return fail(SG_ERR_RANGE, e.what());
        }
        catch (const setgraph::InvalidArgument & e) {
            return fail(SG_ERR_INVALID, e.what());
        }
        catch (const setgraph::ResourceError & e) {
            return fail(SG_ERR_RESOURCE, e.what());
        }
        catch (const setgraph::IoError & e) {
            return fail(SG_ERR_IO, e.what());
        }
        catch (const std::bad_alloc &) {
            return fail(SG_ERR_RESOURCE, "out of memory");
        }
        catch (const std::exception & e) {
            return fail(SG_ERR_INTERNAL, e.what());
        }
        catch (...) {
            return fail(SG_ERR_INTERNAL, "unknown error");
        }
    }

    auto require(const void * p, const char * what) -> void
    {
        if (! p)
            throw setgraph::InvalidArgument(std::string(what) + " must not be NULL");
    }

    auto config_of(const sg_config * c) -> setgraph::Config
    {
        return c ? c->value : setgraph::Config{};
    }

    auto field(setgraph::Config & c, const std::string & key) -> unsigned &
    {
        static const std::map<std::string, std::function<unsigned & (setgraph::Config &)>> fields{
            {"max_n", [] (setgraph::Config & c) -> unsigned & { return c.max_n; }},
            {"count_cap", [] (setgraph::Config & c) -> unsigned & { return c.count_cap; }},
            {"materialize_cap", [] (setgraph::Config & c) -> unsigned & { return c.materialize_cap; }},
            {"triangle_cap", [] (setgraph::Config & c) -> unsigned & { return c.triangle_cap; }},
            {"holes_cap", [] (setgraph::Config & c) -> unsigned & { return c.holes_cap; }},
            {"threads", [] (setgraph::Config & c) -> unsigned & { return c.threads; }},
            {"mela_max_index", [] (setgraph::Config & c) -> unsigned & { return c.mela_max_index; }},
            {"oracle.cliques", [] (setgraph::Config & c) -> unsigned & { return c.oracle.cliques; }},
            {"oracle.chromatic", [] (setgraph::Config & c) -> unsigned & { return c.oracle.chromatic; }},
            {"oracle.independence", [] (setgraph::Config & c) -> unsigned & { return c.oracle.independence; }},
            {"oracle.domination", [] (setgraph::Config & c) -> unsigned & { return c.oracle.domination; }},
            {"oracle.bondage", [] (setgraph::Config & c) -> unsigned & { return c.oracle.bondage; }},
            {"oracle.vertex_cover", [] (setgraph::Config & c) -> unsigned & { return c.oracle.vertex_cover; }},
        };
        auto it = fields.find(key);
        if (it == fields.end())
            throw setgraph::InvalidArgument("unknown config key '" + key + "'");
        return it->second(c);
    }

    auto emit(sg_text ** out, std::string text) -> void
    {
        require(out, "output");
        *out = new sg_text{std::move(text)};
    }

    auto vertex_of(const sg_graph * g, size_t v) -> size_t
    {
        require(g, "graph");
        if (v >= g->value.size())
            throw setgraph::RangeError("vertex " + std::to_string(v) + " outside graph of order " + std::to_string(g->value.size()));
        return v;
    }
}

extern "C" {

const char * sg_version(void)
{
    return "0.1.0";
}

const char * sg_status_name(sg_status status)
{
    switch (status) {
        case SG_OK: return "ok";
        case SG_ERR_RANGE: return "range error";
        case SG_ERR_INVALID: return "invalid argument";
        case SG_ERR_RESOURCE: return "resource guard";
        case SG_ERR_IO: return "i/o error";
        case SG_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char * sg_last_error(void)
{
    return last_error.c_str();
}

sg_status sg_config_create(sg_config ** out)
{
    return guarded([&] {
        require(out, "output");
        *out = new sg_config{};
    });
}

void sg_config_destroy(sg_config * config)
{
    delete config;
}

sg_status sg_config_set(sg_config * config, const char * key, unsigned value)
{
    return guarded([&] {
        require(config, "config");
        require(key, "key");
        auto updated = config->value;
        if (std::string(key) == "timestamp")
            updated.timestamp = value != 0;
        else
            field(updated, key) = value;
        updated.validate();
        config->value = updated;
    });
}

sg_status sg_config_get(const sg_config * config, const char * key, unsigned * out)
{
    return guarded([&] {
        require(config, "config");
        require(key, "key");
        require(out, "output");
        auto copy = config->value;
        *out = std::string(key) == "timestamp" ? unsigned{copy.timestamp} : field(copy, key);
    });
}

sg_status sg_vertex_count(unsigned n, uint64_t * out)
{
    return guarded([&] { require(out, "output"); *out = setgraph::vertex_count(setgraph::GroundSize{n}); });
}

sg_status sg_edge_count(unsigned n, uint64_t * out)
{
    return guarded([&] { require(out, "output"); *out = setgraph::edge_count_closed(setgraph::GroundSize{n}); });
}

sg_status sg_edge_count_recursive(unsigned n, uint64_t * out)
{
    return guarded([&] { require(out, "output"); *out = setgraph::edge_count_recursive(setgraph::GroundSize{n}); });
}

sg_status sg_degree(unsigned n, unsigned cardinality, uint64_t * out)
{
    return guarded([&] { require(out, "output"); *out = setgraph::degree_closed(setgraph::GroundSize{n}, cardinality); });
}

sg_status sg_holes_corrected(unsigned n, uint64_t * out)
{
    return guarded([&] { require(out, "output"); *out = setgraph::triangle_count_corrected(setgraph::GroundSize{n}); });
}

sg_status sg_holes_paper_formula(unsigned n, uint64_t * out)
{
    return guarded([&] { require(out, "output"); *out = setgraph::triangle_count_paper(setgraph::GroundSize{n}); });
}

sg_status sg_label_of_mask(unsigned n, uint32_t mask, unsigned * s, uint64_t * i)
{
    return guarded([&] {
        require(s, "output");
        require(i, "output");
        auto l = setgraph::label_of_mask(setgraph::GroundSize{n}, setgraph::SubsetMask{mask});
        *s = l.s;
        *i = l.i;
    });
}

sg_status sg_mask_of_label(unsigned n, unsigned s, uint64_t i, uint32_t * mask)
{
    return guarded([&] {
        require(mask, "output");
        *mask = setgraph::mask_of_label(setgraph::GroundSize{n}, setgraph::VertexLabel{s, i}).bits;
    });
}

sg_status sg_graph_create(unsigned n, const sg_config * config, sg_graph ** out)
{
    return guarded([&] {
        require(out, "output");
        auto c = config_of(config);
        *out = new sg_graph{setgraph::materialize(setgraph::GroundSize{n}, c.materialize_cap)};
    });
}

void sg_graph_destroy(sg_graph * graph)
{
    delete graph;
}

size_t sg_graph_order(const sg_graph * graph)
{
    return graph ? graph->value.size() : 0;
}

sg_status sg_graph_mask(const sg_graph * graph, size_t v, uint32_t * out)
{
    return guarded([&] { require(out, "output"); *out = graph->value.mask(vertex_of(graph, v)).bits; });
}

int sg_graph_adjacent(const sg_graph * graph, size_t u, size_t v)
{
    if (! graph || u >= graph->value.size() || v >= graph->value.size())
        return 0;
    return graph->value.adjacent(u, v) ? 1 : 0;
}

sg_status sg_graph_degree(const sg_graph * graph, size_t v, uint64_t * out)
{
    return guarded([&] { require(out, "output"); *out = graph->value.degree(vertex_of(graph, v)); });
}

sg_status sg_graph_edge_count(const sg_graph * graph, uint64_t * out)
{
    return guarded([&] { require(graph, "graph"); require(out, "output"); *out = graph->value.edge_count(); });
}

sg_status sg_graph_triangles(const sg_graph * graph, unsigned threads, uint64_t * out)
{
    return guarded([&] {
        require(graph, "graph");
        require(out, "output");
        *out = setgraph::triangle_count_exact(graph->value, threads);
    });
}

sg_status sg_graph_primitive_degree(const sg_graph * graph, size_t v, uint64_t * out)
{
    return guarded([&] { require(out, "output"); *out = setgraph::primitive_degree(graph->value, vertex_of(graph, v)); });
}

sg_status sg_export_graph(unsigned n, const char * format, const sg_config * config, sg_text ** out)
{
    return guarded([&] {
        require(format, "format");
        emit(out, setgraph::export_graph(setgraph::GroundSize{n}, setgraph::parse_graph_format(format), config_of(config)));
    });
}

sg_status sg_invariants(unsigned n, const sg_config * config, sg_text ** out)
{
    return guarded([&] { emit(out, setgraph::invariant_report(setgraph::GroundSize{n}, config_of(config))); });
}

sg_status sg_hole_report(unsigned n, const sg_config * config, sg_text ** out)
{
    return guarded([&] { emit(out, setgraph::hole_report_json(setgraph::GroundSize{n}, config_of(config))); });
}

sg_status sg_degree_csv(unsigned n, sg_text ** out)
{
    return guarded([&] { emit(out, setgraph::degree_csv(setgraph::GroundSize{n})); });
}

sg_status sg_tightness_csv(unsigned n, sg_text ** out)
{
    return guarded([&] { emit(out, setgraph::tightness_csv(setgraph::GroundSize{n})); });
}

sg_status sg_sequence(const char * metric, unsigned max_n, const sg_config * config, sg_text ** out)
{
    return guarded([&] {
        require(metric, "metric");
        auto m = setgraph::parse_metric(metric);
        emit(out, setgraph::render_sequence(m, setgraph::sequence(m, max_n, config_of(config))));
    });
}

sg_status sg_verify(const char * claims, const char * format, const sg_config * config, sg_text ** out)
{
    return guarded([&] {
        require(claims, "claims");
        require(format, "format");
        auto c = config_of(config);
        auto selection = setgraph::verify::parse_selection(claims);
        auto verdicts = setgraph::verify::run_claims(selection, c);
        emit(out, setgraph::verify::render_report(verdicts, setgraph::verify::parse_format(format), c));
    });
}

sg_status sg_mela_report(unsigned max_index, const char * format, const sg_config * config, sg_text ** out)
{
    return guarded([&] {
        require(format, "format");
        auto c = config_of(config);
        c.mela_max_index = max_index;
        std::vector<std::string> selection{"C21", "C22"};
        auto verdicts = setgraph::verify::run_claims(selection, c);
        emit(out, setgraph::verify::render_report(verdicts, setgraph::verify::parse_format(format), c));
    });
}

const char * sg_text_data(const sg_text * text)
{
    return text ? text->value.c_str() : "";
}

size_t sg_text_size(const sg_text * text)
{
    return text ? text->value.size() : 0;
}

void sg_text_destroy(sg_text * text)
{
    delete text;
}

}

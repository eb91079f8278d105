#include <setgraph/setgraph.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace
{
    enum exit_code : int
    {
        exit_ok = 0,
        exit_error = 1,
        exit_usage = 2,
        exit_resource = 3,
    };

    struct failure
    {
        sg_status status;
    };

    auto check(sg_status status) -> void
    {
        if (status != SG_OK)
            throw failure{status};
    }

    auto exit_for(sg_status status) -> int
    {
        switch (status) {
            case SG_ERR_RANGE:
            case SG_ERR_INVALID:
                return exit_usage;
            case SG_ERR_RESOURCE:
                return exit_resource;
            default:
                return exit_error;
        }
    }

    using text_ptr = std::unique_ptr<sg_text, decltype(&sg_text_destroy)>;
    using config_ptr = std::unique_ptr<sg_config, decltype(&sg_config_destroy)>;

    auto take(std::function<sg_status (sg_text **)> produce) -> text_ptr
    {
        sg_text * raw = nullptr;
        check(produce(&raw));
        return {raw, &sg_text_destroy};
    }

    auto write(const sg_text * text, const std::string & path) -> int
    {
        if (path.empty() || path == "-") {
            std::fwrite(sg_text_data(text), 1, sg_text_size(text), stdout);
            std::fflush(stdout);
            return exit_ok;
        }
        std::ofstream out(path, std::ios::binary);
        if (out)
            out.write(sg_text_data(text), static_cast<std::streamsize>(sg_text_size(text)));
        if (! out) {
            std::cerr << "setgraph: cannot write '" << path << "'\n";
            return exit_error;
        }
        return exit_ok;
    }

    // Cap flags; zero means "keep the library default".
    struct caps
    {
        unsigned count_cap = 0, materialize_cap = 0, triangle_cap = 0, holes_cap = 0, mela_max_index = 0;
        unsigned oracle_cliques = 0, oracle_chromatic = 0, oracle_independence = 0;
        unsigned oracle_domination = 0, oracle_bondage = 0, oracle_vertex_cover = 0;
        unsigned threads = 1;
        bool timestamp = false;
    };

    auto make_config(const caps & c, unsigned max_n) -> config_ptr
    {
        sg_config * raw = nullptr;
        check(sg_config_create(&raw));
        config_ptr config{raw, &sg_config_destroy};
        auto set = [&] (const char * key, unsigned value) {
            if (value)
                check(sg_config_set(raw, key, value));
        };
        set("count_cap", c.count_cap);
        set("materialize_cap", c.materialize_cap);
        set("triangle_cap", c.triangle_cap);
        set("holes_cap", c.holes_cap);
        set("mela_max_index", c.mela_max_index);
        set("oracle.cliques", c.oracle_cliques);
        set("oracle.chromatic", c.oracle_chromatic);
        set("oracle.independence", c.oracle_independence);
        set("oracle.domination", c.oracle_domination);
        set("oracle.bondage", c.oracle_bondage);
        set("oracle.vertex_cover", c.oracle_vertex_cover);
        set("max_n", max_n);
        check(sg_config_set(raw, "threads", c.threads));
        check(sg_config_set(raw, "timestamp", c.timestamp ? 1 : 0));
        return config;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Exact computations on set-graphs (intersection graphs of all non-empty subsets)", "setgraph"};
    app.set_version_flag("--version", std::string(sg_version()));
    app.set_config("--config", "", "Read options from a TOML/INI file; command-line flags take precedence");
    app.require_subcommand(1);
    app.fallthrough();

    caps c;
    app.add_option("--count-cap", c.count_cap, "Largest n for closed-form counting")->check(CLI::PositiveNumber);
    app.add_option("--materialize-cap", c.materialize_cap, "Largest n for explicit adjacency")->check(CLI::PositiveNumber);
    app.add_option("--triangle-cap", c.triangle_cap, "Largest n for exact triangle counting")->check(CLI::PositiveNumber);
    app.add_option("--holes-cap", c.holes_cap, "Largest n for the hole recursion")->check(CLI::PositiveNumber);
    app.add_option("--oracle-cliques", c.oracle_cliques, "Largest n for clique enumeration")->check(CLI::PositiveNumber);
    app.add_option("--oracle-chromatic", c.oracle_chromatic, "Largest n for exact colouring")->check(CLI::PositiveNumber);
    app.add_option("--oracle-independence", c.oracle_independence, "Largest n for exact independence")->check(CLI::PositiveNumber);
    app.add_option("--oracle-domination", c.oracle_domination, "Largest n for exact domination")->check(CLI::PositiveNumber);
    app.add_option("--oracle-bondage", c.oracle_bondage, "Largest n for exact bondage")->check(CLI::PositiveNumber);
    app.add_option("--oracle-vertex-cover", c.oracle_vertex_cover, "Largest n for exact vertex cover")->check(CLI::PositiveNumber);
    app.add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);

    std::function<int ()> action;
    std::string out;

    unsigned build_n = 0;
    std::string build_format = "dot";
    auto * build = app.add_subcommand("build", "Export the set-graph");
    build->add_option("--n", build_n, "Ground-set size")->required();
    build->add_option("--format", build_format, "dot, json or csv")->check(CLI::IsMember({"dot", "json", "csv"}));
    build->add_option("--out", out, "Output path (default stdout)");
    build->callback([&] {
        action = [&] {
            auto config = make_config(c, 0);
            return write(take([&] (sg_text ** t) { return sg_export_graph(build_n, build_format.c_str(), config.get(), t); }).get(), out);
        };
    });

    unsigned inv_n = 0;
    auto * invariants = app.add_subcommand("invariants", "Print every invariant of one set-graph as JSON");
    invariants->add_option("--n", inv_n, "Ground-set size")->required();
    invariants->add_option("--out", out, "Output path (default stdout)");
    invariants->callback([&] {
        action = [&] {
            auto config = make_config(c, 0);
            return write(take([&] (sg_text ** t) { return sg_invariants(inv_n, config.get(), t); }).get(), out);
        };
    });

    unsigned holes_n = 0;
    auto * holes = app.add_subcommand("holes", "Triangle counts and primitive-degree histogram");
    holes->add_option("--n", holes_n, "Ground-set size")->required();
    holes->add_option("--out", out, "Output path (default stdout)");
    holes->callback([&] {
        action = [&] {
            auto config = make_config(c, 0);
            return write(take([&] (sg_text ** t) { return sg_hole_report(holes_n, config.get(), t); }).get(), out);
        };
    });

    unsigned vec_n = 0;
    std::string vec_kind = "degree";
    auto * vertices = app.add_subcommand("vertices", "Per-vertex degree or tightness table");
    vertices->add_option("--n", vec_n, "Ground-set size")->required();
    vertices->add_option("--value", vec_kind, "degree or tightness")->check(CLI::IsMember({"degree", "tightness"}));
    vertices->add_option("--out", out, "Output path (default stdout)");
    vertices->callback([&] {
        action = [&] {
            auto text = take([&] (sg_text ** t) { return vec_kind == "degree" ? sg_degree_csv(vec_n, t) : sg_tightness_csv(vec_n, t); });
            return write(text.get(), out);
        };
    });

    std::string metric;
    unsigned seq_max = 0;
    auto * sequence = app.add_subcommand("sequence", "Print an integer sequence indexed by n");
    sequence->add_option("--metric", metric, "vertices, edges, holes, degree_min, degree_max or mela")->required();
    sequence->add_option("--max-n", seq_max, "Last n")->required();
    sequence->add_option("--out", out, "Output path (default stdout)");
    sequence->callback([&] {
        action = [&] {
            auto config = make_config(c, 0);
            return write(take([&] (sg_text ** t) { return sg_sequence(metric.c_str(), seq_max, config.get(), t); }).get(), out);
        };
    });

    std::string claims = "all", format = "json";
    unsigned verify_max = 0;
    auto * verify = app.add_subcommand("verify", "Check the catalogued claims against exact oracles");
    verify->add_option("--claims", claims, "all, or a comma-separated list such as C8,C11");
    verify->add_option("--max-n", verify_max, "Largest n tested (further limited by the caps)");
    verify->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md", "markdown"}));
    verify->add_option("--out", out, "Output path (default stdout)");
    verify->add_option("--mela-max-index", c.mela_max_index, "Largest Mela index for C21/C22");
    verify->add_flag("--timestamp", c.timestamp, "Record the generation time in the report");
    verify->callback([&] {
        action = [&] {
            auto config = make_config(c, verify_max);
            return write(take([&] (sg_text ** t) { return sg_verify(claims.c_str(), format.c_str(), config.get(), t); }).get(), out);
        };
    });

    unsigned mela_max = 20;
    auto * mela = app.add_subcommand("mela", "Closure and divisibility checks on Mela numbers");
    mela->add_option("--max-index", mela_max, "Largest index checked");
    mela->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md", "markdown"}));
    mela->add_option("--out", out, "Output path (default stdout)");
    mela->callback([&] {
        action = [&] {
            auto config = make_config(c, 0);
            return write(take([&] (sg_text ** t) { return sg_mela_report(mela_max, format.c_str(), config.get(), t); }).get(), out);
        };
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        return action ? action() : exit_usage;
    }
    catch (const failure & f) {
        std::cerr << "setgraph: " << sg_status_name(f.status) << ": " << sg_last_error() << '\n';
        return exit_for(f.status);
    }
}

#include <doctest.h>

#include <setgraph/error.hpp>
#include <setgraph/invariants.hpp>
#include <setgraph/reports.hpp>

#include <json.hpp>

#include <algorithm>

using namespace setgraph;

TEST_CASE("csv export")
{
    CHECK(export_graph(GroundSize{2}, GraphFormat::csv) == "1,3\n2,3\n");
    for (unsigned k = 1; k <= 12; ++k) {
        auto csv = export_graph(GroundSize{k}, GraphFormat::csv);
        CHECK(static_cast<std::uint64_t>(std::count(csv.begin(), csv.end(), '\n')) == edge_count_closed(GroundSize{k}));
    }
}

TEST_CASE("dot export")
{
    auto dot = export_graph(GroundSize{3}, GraphFormat::dot);
    CHECK(dot.rfind("graph setgraph_3 {", 0) == 0);
    std::size_t edges = 0, pos = 0;
    while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
        ++edges;
        ++pos;
    }
    CHECK(edges == 15);
    CHECK(dot.find("v_2_1 [label=\"{a1,a2}\"]") != std::string::npos);
}

TEST_CASE("json round trip")
{
    for (unsigned k = 1; k <= 8; ++k) {
        auto text = export_graph(GroundSize{k}, GraphFormat::json);
        auto [n, rows] = parse_graph_json(text);
        CHECK(n == k);
        CHECK(rows == materialize(GroundSize{k}).rows());
    }
    auto one = nlohmann::json::parse(export_graph(GroundSize{1}, GraphFormat::json));
    CHECK(one["vertices"].size() == 1);
    CHECK(one["edges"].empty());
    CHECK_THROWS_AS(parse_graph_json("{"), InvalidArgument);
    CHECK_THROWS_AS(parse_graph_format("svg"), InvalidArgument);
}

TEST_CASE("invariant report")
{
    auto r = nlohmann::json::parse(invariant_report(GroundSize{3}));
    CHECK(r["vertices"] == 7);
    CHECK(r["edges"] == 15);
    CHECK(r["degree_min"] == 3);
    CHECK(r["degree_max"] == 6);
    CHECK(r["h_exact"] == 13);
    CHECK(r["clique_number"] == 4);
    CHECK(r["chromatic_number"] == 4);
    CHECK(r["independence_number"] == 3);
    CHECK(r["domination_number"] == 1);
    CHECK(r["bondage_number"] == 1);
    CHECK(r["mcpherson_number"] == 3);
    CHECK(r["oracle"]["chromatic"] == 4);

    auto one = nlohmann::json::parse(invariant_report(GroundSize{1}));
    CHECK(one["vertices"] == 1);
    CHECK(one["edges"] == 0);
    CHECK(one["h_exact"] == 0);
    CHECK(one["chromatic_number"] == 1);
    CHECK(one["independence_number"] == 1);
    CHECK(one["mcpherson_number"] == 0);
    CHECK(one["bondage_number"].is_null());

    auto big = nlohmann::json::parse(invariant_report(GroundSize{20}));
    CHECK(big["vertices"] == 1048575);
    CHECK(big["h_exact"].is_null());
    CHECK(big["oracle"]["chromatic"].is_null());
    CHECK(big["null_reasons"].contains("h_exact"));
}

TEST_CASE("sequences")
{
    auto rows = [] (Metric m, unsigned max_n) {
        std::vector<std::uint64_t> v;
        for (auto [n, x] : sequence(m, max_n))
            v.push_back(x);
        return v;
    };
    CHECK(rows(Metric::vertices, 5) == std::vector<std::uint64_t>{1, 3, 7, 15, 31});
    CHECK(rows(Metric::edges, 5) == std::vector<std::uint64_t>{0, 2, 15, 80, 375});
    CHECK(rows(Metric::holes, 4) == std::vector<std::uint64_t>{0, 0, 13, 222});
    CHECK(rows(Metric::mela, 4) == std::vector<std::uint64_t>{1, 3, 7, 15});
    CHECK_THROWS_AS(sequence(Metric::holes, 20), RangeError);
    CHECK_THROWS_AS(sequence(Metric::edges, 21), RangeError);
    CHECK(render_sequence(Metric::edges, sequence(Metric::edges, 2)) == "n,edges\n1,0\n2,2\n");
    CHECK_THROWS_AS(parse_metric("girth"), InvalidArgument);
}

TEST_CASE("per-vertex tables")
{
    CHECK(degree_csv(GroundSize{2}) == "label,mask,degree\nv_1_1,1,1\nv_1_2,2,1\nv_2_1,3,2\n");
    CHECK(tightness_csv(GroundSize{2}) == "label,mask,tightness\nv_1_1,1,1\nv_1_2,2,1\nv_2_1,3,2\n");
}

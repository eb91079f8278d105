#include <doctest.h>

#include <setgraph/setgraph.h>

#include <string>

namespace
{
    auto text_of(sg_text * t) -> std::string
    {
        std::string s(sg_text_data(t), sg_text_size(t));
        sg_text_destroy(t);
        return s;
    }
}

TEST_CASE("counts")
{
    std::uint64_t x = 0;
    CHECK(sg_vertex_count(5, &x) == SG_OK);
    CHECK(x == 31);
    CHECK(sg_edge_count(5, &x) == SG_OK);
    CHECK(x == 375);
    CHECK(sg_edge_count_recursive(19, &x) == SG_OK);
    CHECK(sg_degree(3, 2, &x) == SG_OK);
    CHECK(x == 5);
    CHECK(sg_holes_corrected(4, &x) == SG_OK);
    CHECK(x == 222);
    CHECK(sg_holes_paper_formula(3, &x) == SG_OK);
    CHECK(x == 12);
}

TEST_CASE("errors map to status codes")
{
    std::uint64_t x = 0;
    CHECK(sg_vertex_count(0, &x) == SG_ERR_RANGE);
    CHECK(std::string(sg_last_error()).find("0") != std::string::npos);
    CHECK(sg_vertex_count(3, nullptr) == SG_ERR_INVALID);
    CHECK(sg_holes_paper_formula(1, &x) == SG_ERR_RANGE);

    sg_graph * g = nullptr;
    CHECK(sg_graph_create(15, nullptr, &g) == SG_ERR_RESOURCE);
    CHECK(g == nullptr);

    sg_text * t = nullptr;
    CHECK(sg_verify("C99", "json", nullptr, &t) == SG_ERR_INVALID);
    CHECK(sg_export_graph(3, "svg", nullptr, &t) == SG_ERR_INVALID);
    CHECK(std::string(sg_status_name(SG_ERR_RESOURCE)) == "resource guard");
}

TEST_CASE("labels")
{
    unsigned s = 0;
    std::uint64_t i = 0;
    CHECK(sg_label_of_mask(3, 6, &s, &i) == SG_OK);
    CHECK(s == 2);
    CHECK(i == 3);
    std::uint32_t m = 0;
    CHECK(sg_mask_of_label(3, 2, 3, &m) == SG_OK);
    CHECK(m == 6);
    CHECK(sg_mask_of_label(3, 2, 4, &m) == SG_ERR_INVALID);
}

TEST_CASE("graph handle")
{
    sg_graph * g = nullptr;
    REQUIRE(sg_graph_create(4, nullptr, &g) == SG_OK);
    CHECK(sg_graph_order(g) == 15);
    std::uint64_t x = 0;
    CHECK(sg_graph_edge_count(g, &x) == SG_OK);
    CHECK(x == 80);
    CHECK(sg_graph_triangles(g, 2, &x) == SG_OK);
    CHECK(x == 222);
    CHECK(sg_graph_degree(g, 14, &x) == SG_OK);
    CHECK(x == 14);
    CHECK(sg_graph_primitive_degree(g, 14, &x) == SG_OK);
    CHECK(x == 66);
    CHECK(sg_graph_degree(g, 15, &x) == SG_ERR_RANGE);
    std::uint32_t m = 0;
    CHECK(sg_graph_mask(g, 3, &m) == SG_OK);
    CHECK(m == 8);
    CHECK(sg_graph_adjacent(g, 0, 14) == 1);
    CHECK(sg_graph_adjacent(g, 0, 1) == 0);
    CHECK(sg_graph_adjacent(g, 0, 99) == 0);
    sg_graph_destroy(g);
}

TEST_CASE("config")
{
    sg_config * c = nullptr;
    REQUIRE(sg_config_create(&c) == SG_OK);
    unsigned v = 0;
    CHECK(sg_config_get(c, "materialize_cap", &v) == SG_OK);
    CHECK(v == 14);
    CHECK(sg_config_set(c, "materialize_cap", 3) == SG_OK);
    sg_graph * g = nullptr;
    CHECK(sg_graph_create(4, c, &g) == SG_ERR_RESOURCE);
    CHECK(sg_config_set(c, "max_n", 99) == SG_ERR_RANGE);
    CHECK(sg_config_get(c, "max_n", &v) == SG_OK);
    CHECK(v == 20);
    CHECK(sg_config_set(c, "colour", 1) == SG_ERR_INVALID);
    sg_config_destroy(c);
}

TEST_CASE("documents")
{
    sg_text * t = nullptr;
    REQUIRE(sg_export_graph(2, "csv", nullptr, &t) == SG_OK);
    CHECK(text_of(t) == "1,3\n2,3\n");
    REQUIRE(sg_sequence("vertices", 5, nullptr, &t) == SG_OK);
    CHECK(text_of(t) == "n,vertices\n1,1\n2,3\n3,7\n4,15\n5,31\n");
    REQUIRE(sg_verify("C11", "md", nullptr, &t) == SG_OK);
    CHECK(text_of(t).find("| C11 | REFUTED |") != std::string::npos);
    REQUIRE(sg_mela_report(20, "json", nullptr, &t) == SG_OK);
    auto mela = text_of(t);
    CHECK(mela.find("\"C21\"") != std::string::npos);
    CHECK(mela.find("\"C22\"") != std::string::npos);
    REQUIRE(sg_invariants(3, nullptr, &t) == SG_OK);
    CHECK(text_of(t).find("\"h_exact\": 13") != std::string::npos);
    REQUIRE(sg_hole_report(3, nullptr, &t) == SG_OK);
    CHECK(text_of(t).find("\"h_corrected\": 13") != std::string::npos);
    REQUIRE(sg_degree_csv(1, &t) == SG_OK);
    CHECK(text_of(t) == "label,mask,degree\nv_1_1,1,0\n");
}

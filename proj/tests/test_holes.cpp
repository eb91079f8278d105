#include <doctest.h>

#include <setgraph/error.hpp>
#include <setgraph/holes.hpp>
#include <setgraph/invariants.hpp>
#include <setgraph/oracle.hpp>

#include <numeric>

using namespace setgraph;

TEST_CASE("exact triangle counts")
{
    const std::uint64_t pinned[] = {0, 0, 13, 222, 2585, 25830};
    for (unsigned k = 1; k <= 6; ++k) {
        auto g = materialize(GroundSize{k});
        CHECK(triangle_count_exact(g) == pinned[k - 1]);
        CHECK(oracle::count_triangles(oracle::SmallGraph{g}) == pinned[k - 1]);
        CHECK(triangle_count_corrected(GroundSize{k}) == pinned[k - 1]);
    }
}

TEST_CASE("stated recursion values")
{
    CHECK_THROWS_AS(triangle_count_paper(GroundSize{1}), RangeError);
    CHECK(triangle_count_paper(GroundSize{2}) == 0);
    CHECK(triangle_count_paper(GroundSize{3}) == 12);
    CHECK(triangle_count_paper(GroundSize{4}) == 128);
    CHECK(triangle_count_paper(GroundSize{5}) == 1008);
}

TEST_CASE("threaded count equals serial count")
{
    auto g = materialize(GroundSize{10});
    auto serial = triangle_count_exact(g, 1);
    CHECK(triangle_count_exact(g, 3) == serial);
    CHECK(serial == triangle_count_corrected(GroundSize{10}));
}

TEST_CASE("primitive degrees")
{
    auto g = materialize(GroundSize{3});
    auto d = primitive_degrees(g);
    CHECK(d == std::vector<std::uint64_t>{3, 3, 3, 7, 7, 7, 9});
    for (unsigned k = 2; k <= 8; ++k) {
        auto h = materialize(GroundSize{k});
        auto pd = primitive_degrees(h, 2);
        CHECK(std::accumulate(pd.begin(), pd.end(), std::uint64_t{0}) == 3 * triangle_count_exact(h));
        CHECK(pd.back() == apex_primitive_degree(GroundSize{k}));
        CHECK(primitive_degree(h, 0) == oracle::count_triangles_through(oracle::SmallGraph{h}, 0));
    }
}

TEST_CASE("complete graph holes")
{
    for (std::uint64_t m = 0; m <= 30; ++m)
        CHECK(h_complete(m) == oracle::count_triangles(oracle::SmallGraph::complete(m)));
}

TEST_CASE("hole report")
{
    auto r = hole_report(GroundSize{3});
    CHECK(r.h_exact == 13u);
    CHECK(r.h_paper_formula == 12u);
    CHECK(r.h_corrected == 13u);
    CHECK(r.apex_primitive_degree == 9);
    CHECK(r.primitive_degree_histogram == std::map<std::uint64_t, std::uint64_t>{{3, 3}, {7, 3}, {9, 1}});

    auto big = hole_report(GroundSize{16});
    CHECK_FALSE(big.h_exact.has_value());
    CHECK(big.h_corrected.has_value());
}

#include <doctest.h>

#include <setgraph/error.hpp>
#include <setgraph/invariants.hpp>

using namespace setgraph;

TEST_CASE("degree paths agree")
{
    for (unsigned k = 1; k <= 8; ++k) {
        GroundSize n{k};
        auto g = materialize(n);
        for (std::size_t v = 0; v < g.size(); ++v) {
            auto m = g.mask(v);
            auto d = degree_closed(n, m.cardinality());
            CHECK(degree_inclusion_exclusion(n, m) == d);
            CHECK(degree_brute(g, m) == d);
            CHECK(tightness(n, m) == d);
        }
    }
    CHECK_THROWS_AS(degree_closed(GroundSize{3}, 0), RangeError);
    CHECK_THROWS_AS(degree_closed(GroundSize{3}, 4), RangeError);
}

TEST_CASE("degree values")
{
    GroundSize n{3};
    CHECK(degree_closed(n, 1) == 3);
    CHECK(degree_closed(n, 2) == 5);
    CHECK(degree_closed(n, 3) == 6);
    auto x = degree_extremes(GroundSize{10});
    CHECK(x.min == 511);
    CHECK(x.max == 1022);
    CHECK(degree_extremes(GroundSize{1}).max == 0);
}

TEST_CASE("edge counts")
{
    const std::uint64_t pinned[] = {0, 2, 15, 80, 375, 1652};
    for (unsigned k = 1; k <= 6; ++k) {
        GroundSize n{k};
        CHECK(edge_count_closed(n) == pinned[k - 1]);
        CHECK(edge_count_recursive(n) == pinned[k - 1]);
        CHECK(edge_count_brute(n) == pinned[k - 1]);
    }
    for (unsigned k = 1; k <= 20; ++k)
        CHECK(edge_count_recursive(GroundSize{k}) == edge_count_closed(GroundSize{k}));
    for (unsigned k = 1; k <= 20; ++k)
        CHECK(2 * edge_count_closed(GroundSize{k}) == degree_sum_closed(GroundSize{k}));
}

TEST_CASE("tightness recursion")
{
    for (unsigned k = 1; k <= 9; ++k) {
        auto prev = tightness_vector(GroundSize{k});
        auto next = tightness_recursion_step(GroundSize{k}, prev.values);
        CHECK(next.values == tightness_vector(GroundSize{k + 1}).values);
    }
    std::vector<std::uint64_t> wrong(4);
    CHECK_THROWS_AS(tightness_recursion_step(GroundSize{3}, wrong), InvalidArgument);
}

TEST_CASE("characteristic function")
{
    CHECK(characteristic(SubsetMask{1}, SubsetMask{3}) == 1);
    CHECK(characteristic(SubsetMask{1}, SubsetMask{2}) == 0);
}

#include <doctest.h>

#include <setgraph/core.hpp>
#include <setgraph/error.hpp>

#include <bit>
#include <set>

using namespace setgraph;

TEST_CASE("ground size bounds")
{
    CHECK_THROWS_AS(GroundSize{0}, RangeError);
    CHECK_THROWS_AS(GroundSize{21}, RangeError);
    CHECK(GroundSize{20}.value() == 20);
    CHECK_THROWS_AS((GroundSize{15, 14}), RangeError);
}

TEST_CASE("subset masks are validated")
{
    GroundSize n{3};
    CHECK_THROWS_AS(SubsetMask::checked(n, 0), InvalidArgument);
    CHECK_THROWS_AS(SubsetMask::checked(n, 8), InvalidArgument);
    CHECK(SubsetMask::checked(n, 7).cardinality() == 3);
    CHECK(subset_string(SubsetMask{5}) == "{a1,a3}");
}

TEST_CASE("labels at n=3")
{
    SetGraphSpec spec{GroundSize{3}};
    CHECK(spec.vertex_count() == 7);
    auto masks = spec.masks();
    std::vector<std::uint32_t> bits;
    for (auto m : masks)
        bits.push_back(m.bits);
    CHECK(bits == std::vector<std::uint32_t>{1, 2, 4, 3, 5, 6, 7});

    CHECK(spec.label_of(SubsetMask{1}) == VertexLabel{1, 1});
    CHECK(spec.label_of(SubsetMask{4}) == VertexLabel{1, 3});
    CHECK(spec.label_of(SubsetMask{3}) == VertexLabel{2, 1});
    CHECK(spec.label_of(SubsetMask{6}) == VertexLabel{2, 3});
    CHECK(spec.label_of(SubsetMask{7}) == VertexLabel{3, 1});
    CHECK_THROWS_AS(spec.mask_of(VertexLabel{2, 4}), InvalidArgument);
    CHECK_THROWS_AS(spec.mask_of(VertexLabel{4, 1}), InvalidArgument);
}

TEST_CASE("label round trip and canonical index")
{
    for (unsigned k = 1; k <= 12; ++k) {
        SetGraphSpec spec{GroundSize{k}};
        auto masks = spec.masks();
        REQUIRE(masks.size() == spec.vertex_count());
        for (std::size_t v = 0; v < masks.size(); ++v) {
            CHECK(spec.mask_of(spec.label_of(masks[v])) == masks[v]);
            CHECK(spec.index_of(masks[v]) == v);
            CHECK(spec.mask_at(v) == masks[v]);
            if (v > 0) {
                auto a = masks[v - 1], b = masks[v];
                CHECK((a.cardinality() < b.cardinality() || (a.cardinality() == b.cardinality() && a.bits < b.bits)));
            }
        }
    }
}

TEST_CASE("materialized adjacency matches the predicate")
{
    for (unsigned k = 1; k <= 8; ++k) {
        auto g = materialize(GroundSize{k});
        for (std::size_t u = 0; u < g.size(); ++u) {
            CHECK_FALSE(g.adjacent(u, u));
            for (std::size_t v = 0; v < g.size(); ++v)
                if (u != v) {
                    CHECK(g.adjacent(u, v) == g.adjacent(v, u));
                    CHECK(g.adjacent(u, v) == ((g.mask(u).bits & g.mask(v).bits) != 0));
                }
        }
    }
}

TEST_CASE("materialization guard")
{
    CHECK_THROWS_AS(materialize(GroundSize{15}), ResourceError);
    CHECK(materialize_bytes(13) > materialize_bytes(12));
}

TEST_CASE("extension map")
{
    for (unsigned k = 1; k <= 10; ++k) {
        GroundSize n{k};
        auto map = extension_map(n);
        auto old = vertex_count(n);
        CHECK(map.count(ExtensionRole::erstwhile) == old);
        CHECK(map.count(ExtensionRole::replica) == old);
        CHECK(map.count(ExtensionRole::new_singleton) == 1);
        CHECK(map.roles.size() == 2 * old + 1);
        SetGraphSpec next{GroundSize{k + 1}};
        for (std::size_t v = 0; v < map.roles.size(); ++v) {
            auto m = next.mask_at(v);
            switch (map.roles[v]) {
                case ExtensionRole::erstwhile: CHECK(map.origin[v] == m); break;
                case ExtensionRole::replica: CHECK(replica_of(n, map.origin[v]) == m); break;
                case ExtensionRole::new_singleton: CHECK(m.bits == (1u << k)); break;
            }
        }
    }
}

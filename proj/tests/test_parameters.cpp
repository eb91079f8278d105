#include <doctest.h>

#include <setgraph/parameters.hpp>

using namespace setgraph;

TEST_CASE("maximum cliques")
{
    const std::size_t counts[] = {1, 2, 4, 12, 81};
    for (unsigned k = 1; k <= 5; ++k) {
        auto g = materialize(GroundSize{k});
        auto c = max_cliques(g);
        CHECK(c.clique_size == clique_number(GroundSize{k}));
        CHECK(c.cliques.size() == counts[k - 1]);
    }
    auto w = clique_witness(GroundSize{4});
    CHECK(w.size() == 8);
    for (auto a : w)
        for (auto b : w)
            CHECK(a.intersects(b));
}

TEST_CASE("chromatic number")
{
    for (unsigned k = 1; k <= 12; ++k) {
        auto c = chromatic_coloring(GroundSize{k});
        CHECK(is_proper(c));
        CHECK(c.colour_count == clique_number(GroundSize{k}));
    }
    for (unsigned k = 1; k <= 4; ++k)
        CHECK(chromatic_oracle(materialize(GroundSize{k})) == clique_number(GroundSize{k}));
}

TEST_CASE("independence and domination")
{
    for (unsigned k = 1; k <= 5; ++k) {
        auto g = materialize(GroundSize{k});
        CHECK(independence_oracle(g) == k);
        CHECK(independence_number(GroundSize{k}).value == k);
    }
    for (unsigned k = 1; k <= 4; ++k) {
        auto d = domination_oracle(materialize(GroundSize{k}));
        CHECK(d.value == 1);
        CHECK(d.witness.size() == 1);
    }
    for (unsigned k = 1; k <= 12; ++k)
        CHECK(full_set_is_universal(GroundSize{k}));
}

TEST_CASE("bondage")
{
    for (unsigned k = 2; k <= 4; ++k) {
        auto b = bondage_oracle(materialize(GroundSize{k}));
        REQUIRE(b.has_value());
        CHECK(b->value == 1);
        auto expected = bondage_number(GroundSize{k});
        CHECK(b->edge == expected.edge);
    }
    CHECK_FALSE(bondage_oracle(materialize(GroundSize{1})).has_value());
}

TEST_CASE("mcpherson number")
{
    for (unsigned k = 1; k <= 5; ++k) {
        GroundSize n{k};
        auto g = materialize(n);
        CHECK(mcpherson_oracle(g) == mcpherson_number(n));

        std::vector<SubsetMask> order;
        for (auto m : g.masks())
            if (! (m.bits & 1u))
                order.push_back(m);
        auto outcome = simulate_explosions(g, order);
        CHECK(outcome.complete);
        CHECK(outcome.iterations == mcpherson_number(n));
    }
}

TEST_CASE("explosion state")
{
    auto p = oracle::SmallGraph::path(3);
    ExplosionState s{p};
    CHECK_FALSE(s.complete());
    CHECK_FALSE(s.linked(0, 2));
    s.explode(0);
    CHECK(s.linked(0, 2));
    CHECK(s.complete());
}

#include <doctest.h>

#include <setgraph/error.hpp>
#include <setgraph/oracle.hpp>

#include <algorithm>
#include <numeric>
#include <random>

using namespace setgraph;
using namespace setgraph::oracle;

namespace
{
    auto random_graph(std::size_t size, double p, std::mt19937 & rng) -> SmallGraph
    {
        SmallGraph g{size};
        std::bernoulli_distribution edge(p);
        for (std::size_t u = 0; u < size; ++u)
            for (std::size_t v = u + 1; v < size; ++v)
                if (edge(rng))
                    g.add_edge(u, v);
        return g;
    }
}

TEST_CASE("known small graphs")
{
    auto k5 = SmallGraph::complete(5);
    CHECK(k5.edge_count() == 10);
    CHECK(count_triangles(k5) == 10);
    CHECK(chromatic_exact(k5) == 5);
    CHECK(mis_exact(k5) == 1);
    CHECK(dominating_exact(k5).size == 1);
    CHECK(vertex_cover_exact(k5) == 4);
    CHECK(max_cliques_exact(k5).clique_size == 5);

    auto p4 = SmallGraph::path(4);
    CHECK(p4.edge_count() == 3);
    CHECK(count_triangles(p4) == 0);
    CHECK(chromatic_exact(p4) == 2);
    CHECK(mis_exact(p4) == 2);
    CHECK(dominating_exact(p4).size == 2);

    auto e3 = SmallGraph::edgeless(3);
    CHECK(chromatic_exact(e3) == 1);
    CHECK(mis_exact(e3) == 3);
    CHECK(dominating_exact(e3).size == 3);
    CHECK(vertex_cover_exact(e3) == 0);
}

TEST_CASE("self loops are ignored")
{
    SmallGraph g{3};
    g.add_edge(1, 1);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("random graph properties")
{
    std::mt19937 rng{12345};
    for (int round = 0; round < 40; ++round) {
        auto size = 1 + rng() % 12;
        auto g = random_graph(size, 0.2 + 0.05 * (round % 12), rng);

        // Gallai: independent set complements a vertex cover
        CHECK(mis_exact(g) + vertex_cover_exact(g) == size);

        auto cliques = max_cliques_exact(g);
        CHECK(chromatic_exact(g) >= cliques.clique_size);
        CHECK(mis_exact(complement(g)) == cliques.clique_size);

        std::vector<std::size_t> perm(size);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto h = relabel(g, perm);
        CHECK(count_triangles(h) == count_triangles(g));
        CHECK(chromatic_exact(h) == chromatic_exact(g));
        CHECK(dominating_exact(h).size == dominating_exact(g).size);
        CHECK(max_cliques_exact(h).cliques.size() == cliques.cliques.size());

        std::uint64_t through = 0;
        for (std::size_t v = 0; v < size; ++v)
            through += count_triangles_through(g, v);
        CHECK(through == 3 * count_triangles(g));
        CHECK(enum_triangles(g).size() == count_triangles(g));

        auto dom = dominating_exact(g);
        std::vector<bool> covered(size);
        for (auto v : dom.witness)
            for (std::size_t u = 0; u < size; ++u)
                if (u == v || g.adjacent(u, v))
                    covered[u] = true;
        CHECK(std::all_of(covered.begin(), covered.end(), [] (bool b) { return b; }));
    }
}

TEST_CASE("oracle size guards")
{
    CHECK_THROWS_AS(chromatic_exact(SmallGraph{max_chromatic_vertices + 1}), ResourceError);
    CHECK_THROWS_AS(mis_exact(SmallGraph{max_search_vertices + 1}), ResourceError);
    CHECK_THROWS_AS(max_cliques_exact(SmallGraph{max_clique_vertices + 1}), ResourceError);
}

#pragma once

#include <setgraph/core.hpp>
#include <setgraph/oracle.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace setgraph
{
    /// Largest n for which each exact search is run.
    struct OracleCaps
    {
        unsigned cliques = 6;
        unsigned chromatic = 4;
        unsigned independence = 5;
        unsigned domination = 4;
        unsigned bondage = 4;
        unsigned vertex_cover = 5;
    };

    struct Coloring
    {
        unsigned n;
        /// Colour index per vertex in canonical order.
        std::vector<unsigned> colour;
        unsigned colour_count;
    };

    /// Checks every pair of vertices against the adjacency predicate.
    auto is_proper(const Coloring & c) -> bool;

    struct CliqueSet
    {
        unsigned n;
        std::size_t clique_size;
        std::vector<std::vector<SubsetMask>> cliques;
    };

    /// 2^(n-1): the subsets containing a fixed element are pairwise intersecting.
    auto clique_number(GroundSize n) -> std::uint64_t;
    /// The star of a_1.
    auto clique_witness(GroundSize n) -> std::vector<SubsetMask>;
    auto max_cliques(const MaterializedGraph & g) -> CliqueSet;

    /**
     * A proper colouring with 2^(n-1) colours: each subset shares a colour
     * with its complement (disjoint, so never adjacent) and the full set gets
     * its own. Colours are numbered by first appearance in canonical order.
     */
    auto chromatic_coloring(GroundSize n) -> Coloring;
    auto chromatic_oracle(const MaterializedGraph & g) -> std::uint64_t;

    struct Witnessed
    {
        std::uint64_t value;
        std::vector<SubsetMask> witness;
    };

    /// n, witnessed by the singletons.
    auto independence_number(GroundSize n) -> Witnessed;
    auto independence_oracle(const MaterializedGraph & g) -> std::uint64_t;

    /// 1, witnessed by the full set.
    auto domination(GroundSize n) -> Witnessed;
    /// True iff the full set is adjacent to every other vertex.
    auto full_set_is_universal(GroundSize n) -> bool;
    auto domination_oracle(const MaterializedGraph & g) -> Witnessed;

    struct Bondage
    {
        std::uint64_t value;
        std::pair<SubsetMask, SubsetMask> edge;
    };

    /// 1, witnessed by the edge from {a_1} to the full set.
    auto bondage_number(GroundSize n) -> Bondage;

    /**
     * Removes each edge in lexicographic canonical order and recomputes the
     * exact domination number. Returns the first edge whose removal raises
     * it, or nothing when no single removal does.
     */
    auto bondage_oracle(const MaterializedGraph & g) -> std::optional<Bondage>;

    /// 2^(n-1) - 1.
    auto mcpherson_number(GroundSize n) -> std::uint64_t;

    /// Vertex u ~ v iff their masks are disjoint.
    auto disjointness_graph(const MaterializedGraph & g) -> oracle::SmallGraph;

    /// Minimum vertex cover of the disjointness graph.
    auto mcpherson_oracle(const MaterializedGraph & g) -> std::uint64_t;

    /**
     * Underlying graph of a series of vertex explosions: an exploded vertex is
     * linked to every other vertex, original edges stay.
     */
    class ExplosionState
    {
    public:
        explicit ExplosionState(const oracle::SmallGraph & base);

        auto explode(std::size_t v) -> void;
        auto exploded(std::size_t v) const -> bool { return _exploded[v]; }
        auto linked(std::size_t u, std::size_t v) const -> bool;
        auto complete() const -> bool;

    private:
        const oracle::SmallGraph & _base;
        std::vector<bool> _exploded;
    };

    struct ExplosionOutcome
    {
        bool complete;
        /// Explosions applied when the graph first became complete, or the full list length.
        std::size_t iterations;
    };

    auto simulate_explosions(const oracle::SmallGraph & g, std::span<const std::size_t> order) -> ExplosionOutcome;
    auto simulate_explosions(const MaterializedGraph & g, std::span<const SubsetMask> order) -> ExplosionOutcome;
}

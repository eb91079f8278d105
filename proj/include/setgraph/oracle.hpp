#pragma once

#include <setgraph/bitrows.hpp>
#include <setgraph/core.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace setgraph::oracle
{
    inline constexpr std::size_t max_triangle_vertices = std::size_t{1} << 13;
    inline constexpr std::size_t max_clique_vertices = 63;
    inline constexpr std::size_t max_chromatic_vertices = 16;
    inline constexpr std::size_t max_search_vertices = 31;

    /// Arbitrary simple undirected graph on vertices 0..size-1.
    class SmallGraph
    {
    public:
        explicit SmallGraph(std::size_t size) : _rows(size) {}
        explicit SmallGraph(const MaterializedGraph & g) : _rows(g.rows()) {}

        auto size() const -> std::size_t { return _rows.size(); }
        auto adjacent(std::size_t u, std::size_t v) const -> bool { return _rows.test(u, v); }
        auto rows() const -> const BitRows & { return _rows; }
        auto edge_count() const -> std::uint64_t;

        /// Ignores self-loops.
        auto add_edge(std::size_t u, std::size_t v) -> void;
        auto remove_edge(std::size_t u, std::size_t v) -> void;

        static auto complete(std::size_t m) -> SmallGraph;
        static auto path(std::size_t m) -> SmallGraph;
        static auto edgeless(std::size_t m) -> SmallGraph;

    private:
        BitRows _rows;
    };

    /// Every non-adjacent pair of distinct vertices becomes an edge.
    auto complement(const SmallGraph & g) -> SmallGraph;

    /// Vertex v of g becomes vertex perm[v].
    auto relabel(const SmallGraph & g, std::span<const std::size_t> perm) -> SmallGraph;

    using Triple = std::array<std::size_t, 3>;

    /// All triangles as ascending triples, by plain triple enumeration.
    auto enum_triangles(const SmallGraph & g) -> std::vector<Triple>;
    /// Same enumeration, counting only.
    auto count_triangles(const SmallGraph & g) -> std::uint64_t;
    /// Triangles containing v: adjacent pairs among v's neighbours.
    auto count_triangles_through(const SmallGraph & g, std::size_t v) -> std::uint64_t;

    struct CliqueList
    {
        std::size_t clique_size = 0;
        /// Each clique ascending; cliques in lexicographic order.
        std::vector<std::vector<std::size_t>> cliques;
    };

    /// All maximum cliques, Bron-Kerbosch with Tomita pivoting and a size bound.
    auto max_cliques_exact(const SmallGraph & g) -> CliqueList;

    /// Branch and bound over colour counts from the clique number upwards.
    auto chromatic_exact(const SmallGraph & g) -> std::size_t;

    auto mis_exact(const SmallGraph & g) -> std::size_t;

    struct DominatingSet
    {
        std::size_t size = 0;
        std::vector<std::size_t> witness;
    };

    auto dominating_exact(const SmallGraph & g) -> DominatingSet;

    auto vertex_cover_exact(const SmallGraph & g) -> std::size_t;
}

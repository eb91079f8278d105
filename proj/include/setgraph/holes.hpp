#pragma once

#include <setgraph/core.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace setgraph
{
    /// Largest n whose triangle count the analytic recursion evaluates.
    inline constexpr unsigned max_holes_n = 19;
    /// Default ceiling for the bit-parallel exact count.
    inline constexpr unsigned default_triangle_cap = 13;

    /**
     * Exact triangle count. For every edge (u, v) with u before v, counts the
     * common neighbours after v by AND-ing the two adjacency rows, so each
     * triangle is seen once. Rows are split across `threads` workers.
     */
    auto triangle_count_exact(const MaterializedGraph & g, unsigned threads = 1) -> std::uint64_t;

    /// h(n+1) = h(n) + C(2^n, 3) + 4|E(n)| from h(2) = 0, evaluated literally.
    auto triangle_count_paper(GroundSize n) -> std::uint64_t;

    /**
     * Triangle count by decomposing the triangles that extending G(n) to
     * G(n+1) creates:
     *   - three vertices among the replicas and the new singleton (a clique of order 2^n),
     *   - an old edge (S, T) plus a replica X + a_{n+1} with X meeting both S and T,
     *   - an old vertex S plus two replicas that both meet S.
     * Edge sums run over (|S|, |T|, |S n T|) classes, so nothing is materialized.
     */
    auto triangle_count_corrected(GroundSize n) -> std::uint64_t;

    /// Triangles through vertex v: half the common-neighbour count summed over its neighbours.
    auto primitive_degree(const MaterializedGraph & g, std::size_t v) -> std::uint64_t;
    auto primitive_degrees(const MaterializedGraph & g, unsigned threads = 1) -> std::vector<std::uint64_t>;

    /// |E| - Delta: every edge not touching the full set closes a triangle with it.
    auto apex_primitive_degree(GroundSize n) -> std::uint64_t;

    /// C(m, 3), the triangle count of K_m.
    auto h_complete(std::uint64_t m) -> std::uint64_t;

    struct HoleReport
    {
        unsigned n;
        std::optional<std::uint64_t> h_exact;
        std::optional<std::uint64_t> h_paper_formula;
        std::optional<std::uint64_t> h_corrected;
        std::uint64_t apex_primitive_degree;
        /// primitive degree -> number of vertices; empty when h_exact is absent.
        std::map<std::uint64_t, std::uint64_t> primitive_degree_histogram;
    };

    struct HoleOptions
    {
        unsigned triangle_cap = default_triangle_cap;
        unsigned materialize_cap = default_materialize_cap;
        unsigned threads = 1;
    };

    auto hole_report(GroundSize n, const HoleOptions & options = {}) -> HoleReport;
}

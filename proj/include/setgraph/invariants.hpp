#pragma once

#include <setgraph/core.hpp>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace setgraph
{
    /// xi_a(b): 1 iff a and b intersect.
    inline auto characteristic(SubsetMask a, SubsetMask b) -> unsigned
    {
        return a.intersects(b) ? 1u : 0u;
    }

    /// Degree of any k-subset vertex: 2^n - 2^(n-k) - 1.
    auto degree_closed(GroundSize n, unsigned k) -> std::uint64_t;

    /// Degree as (sum over non-empty J of (-1)^(|J|-1) 2^(n-|J|)) - 1, J ranging over elements of m.
    auto degree_inclusion_exclusion(GroundSize n, SubsetMask m) -> std::uint64_t;

    /// Row popcount of the materialized graph.
    auto degree_brute(const MaterializedGraph & g, SubsetMask v) -> std::uint64_t;

    struct DegreeExtremes
    {
        std::uint64_t min;
        std::uint64_t max;
    };

    auto degree_extremes(GroundSize n) -> DegreeExtremes;

    struct DegreeProfile
    {
        unsigned n;
        /// by_cardinality[k-1] is the degree shared by every k-subset.
        std::vector<std::uint64_t> by_cardinality;
        /// Degrees in canonical vertex order.
        std::vector<std::uint64_t> sequence;
    };

    auto degree_profile(GroundSize n) -> DegreeProfile;

    /// All pairs minus disjoint pairs: C(2^n - 1, 2) - (3^n - 2^(n+1) + 1) / 2.
    auto edge_count_closed(GroundSize n) -> std::uint64_t;

    /// |E(n+1)| = 3|E(n)| + |V(n)| + C(|V(n)| + 1, 2), from |E(1)| = 0.
    auto edge_count_recursive(GroundSize n) -> std::uint64_t;

    /// Unordered intersecting pairs by direct predicate scan (oracle).
    auto edge_count_brute(GroundSize n) -> std::uint64_t;

    /// Number of other subsets that meet m, by direct summation.
    auto tightness(GroundSize n, SubsetMask m) -> std::uint64_t;

    struct TightnessVector
    {
        unsigned n;
        std::vector<std::uint64_t> values; // canonical order
    };

    auto tightness_vector(GroundSize n) -> TightnessVector;

    /**
     * Tightness values of G_{A^(n+1)} from those of G_{A^(n)}: the new
     * singleton gets 2^n - 1, an old subset with value k gets 2k + 1, and its
     * replica gets 2^n + k.
     */
    auto tightness_recursion_step(GroundSize n, std::span<const std::uint64_t> old_values) -> TightnessVector;

    /// Sum over cardinality classes of C(n,k) * degree_closed(n, k); equals 2|E|.
    auto degree_sum_closed(GroundSize n) -> std::uint64_t;
}

#pragma once

#include <setgraph/bitrows.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace setgraph
{
    /// Largest ground-set size whose counts all fit in 64 bits.
    inline constexpr unsigned max_count_n = 20;
    inline constexpr unsigned default_materialize_cap = 14;
    /// Compiled ceiling for materialization, whatever the configured cap (~134 MB).
    inline constexpr unsigned max_materialize_n = 15;

    auto binomial(std::uint64_t n, std::uint64_t k) -> std::uint64_t;
    auto pow2(unsigned e) -> std::uint64_t;

    /// Size n of the ground set {a_1..a_n}, validated against a cap.
    class GroundSize
    {
    public:
        explicit GroundSize(unsigned n, unsigned cap = max_count_n);

        auto value() const -> unsigned { return _n; }
        auto operator<=>(const GroundSize &) const = default;

    private:
        unsigned _n;
    };

    /// Non-empty subset of the ground set; bit j-1 is set iff a_j is a member.
    struct SubsetMask
    {
        std::uint32_t bits = 0;

        auto cardinality() const -> unsigned;
        auto intersects(SubsetMask o) const -> bool { return (bits & o.bits) != 0; }
        auto operator<=>(const SubsetMask &) const = default;

        /// Throws InvalidArgument unless 0 < bits < 2^n.
        static auto checked(GroundSize n, std::uint64_t bits) -> SubsetMask;
    };

    /// Renders as "{a1,a3}".
    auto subset_string(SubsetMask m) -> std::string;

    /// v_{s,i}: cardinality s, 1-based position i within its cardinality class.
    struct VertexLabel
    {
        unsigned s = 0;
        std::uint64_t i = 0;

        auto operator<=>(const VertexLabel &) const = default;
    };

    /// The edge rule: distinct subsets with non-empty intersection.
    inline auto adjacent(SubsetMask u, SubsetMask v) -> bool
    {
        return u != v && u.intersects(v);
    }

    auto vertex_count(GroundSize n) -> std::uint64_t;

    /**
     * The implicit set-graph G_{A^(n)}. Vertices are addressed either by mask
     * or by canonical index: cardinality ascending, then mask value ascending.
     * Nothing is stored beyond n; every query is arithmetic.
     */
    class SetGraphSpec
    {
    public:
        explicit SetGraphSpec(GroundSize n);

        auto ground() const -> GroundSize { return _n; }
        auto n() const -> unsigned { return _n.value(); }
        auto vertex_count() const -> std::uint64_t;
        auto full_mask() const -> SubsetMask;

        auto label_of(SubsetMask m) const -> VertexLabel;
        auto mask_of(VertexLabel l) const -> SubsetMask;

        auto index_of(SubsetMask m) const -> std::size_t;
        auto mask_at(std::size_t index) const -> SubsetMask;

        /// All vertex masks in canonical order.
        auto masks() const -> std::vector<SubsetMask>;

    private:
        GroundSize _n;
        std::vector<std::uint64_t> _class_start; // index of the first vertex of cardinality s, s = 1..n+1
    };

    auto label_of_mask(GroundSize n, SubsetMask m) -> VertexLabel;
    auto mask_of_label(GroundSize n, VertexLabel l) -> SubsetMask;

    /**
     * Explicit adjacency of G_{A^(n)} in canonical vertex order. Rows are
     * symmetric and irreflexive.
     */
    class MaterializedGraph
    {
    public:
        auto spec() const -> const SetGraphSpec & { return _spec; }
        auto n() const -> unsigned { return _spec.n(); }
        auto size() const -> std::size_t { return _masks.size(); }
        auto mask(std::size_t v) const -> SubsetMask { return _masks[v]; }
        auto masks() const -> const std::vector<SubsetMask> & { return _masks; }
        auto index_of(SubsetMask m) const -> std::size_t { return _spec.index_of(m); }
        auto rows() const -> const BitRows & { return _rows; }
        auto adjacent(std::size_t u, std::size_t v) const -> bool { return _rows.test(u, v); }
        auto degree(std::size_t v) const -> std::uint64_t { return _rows.row_count(v); }
        auto edge_count() const -> std::uint64_t;

    private:
        friend auto materialize(GroundSize, unsigned) -> MaterializedGraph;
        explicit MaterializedGraph(GroundSize n);

        SetGraphSpec _spec;
        std::vector<SubsetMask> _masks;
        BitRows _rows;
    };

    /// Adjacency bytes needed to materialize G_{A^(n)}.
    auto materialize_bytes(unsigned n) -> std::uint64_t;

    /// Throws ResourceError naming the memory estimate when n exceeds cap.
    auto materialize(GroundSize n, unsigned cap = default_materialize_cap) -> MaterializedGraph;

    enum class ExtensionRole
    {
        erstwhile,
        replica,
        new_singleton
    };

    /**
     * Decomposition of G_{A^(n+1)} relative to G_{A^(n)}: old vertices,
     * their replicas (old mask plus a_{n+1}), and the new singleton {a_{n+1}}.
     * Entries are indexed by canonical index in G_{A^(n+1)}.
     */
    struct ExtensionMap
    {
        GroundSize n;
        std::vector<ExtensionRole> roles;
        /// For erstwhile and replica vertices, the originating mask in G_{A^(n)}.
        std::vector<SubsetMask> origin;

        auto count(ExtensionRole r) const -> std::size_t;
    };

    auto replica_of(GroundSize n, SubsetMask m) -> SubsetMask;
    auto extension_map(GroundSize n) -> ExtensionMap;
}

#include <setgraph/error.hpp>
#include <setgraph/invariants.hpp>

#include <string>

using std::to_string;
using std::uint64_t;
using std::vector;

namespace setgraph
{
    auto degree_closed(GroundSize n, unsigned k) -> uint64_t
    {
        if (k < 1 || k > n.value())
            throw RangeError("cardinality " + to_string(k) + " outside 1.." + to_string(n.value()));
        return pow2(n.value()) - pow2(n.value() - k) - 1;
    }

    auto degree_inclusion_exclusion(GroundSize n, SubsetMask m) -> uint64_t
    {
        auto c = SubsetMask::checked(n, m.bits);
        // |intersection of stars over J| = 2^(n - |J|)
        std::int64_t union_size = 0;
        for (std::uint32_t j = c.bits; j != 0; j = (j - 1) & c.bits) {
            auto size = SubsetMask{j}.cardinality();
            auto term = static_cast<std::int64_t>(pow2(n.value() - size));
            union_size += (size % 2 == 1) ? term : -term;
        }
        return static_cast<uint64_t>(union_size - 1);
    }

    auto degree_brute(const MaterializedGraph & g, SubsetMask v) -> uint64_t
    {
        return g.degree(g.index_of(v));
    }

    auto degree_extremes(GroundSize n) -> DegreeExtremes
    {
        return {degree_closed(n, 1), degree_closed(n, n.value())};
    }

    auto degree_profile(GroundSize n) -> DegreeProfile
    {
        DegreeProfile p{n.value(), {}, {}};
        for (unsigned k = 1; k <= n.value(); ++k)
            p.by_cardinality.push_back(degree_closed(n, k));
        for (auto m : SetGraphSpec{n}.masks())
            p.sequence.push_back(p.by_cardinality[m.cardinality() - 1]);
        return p;
    }

    auto edge_count_closed(GroundSize n) -> uint64_t
    {
        uint64_t pow3 = 1;
        for (unsigned i = 0; i < n.value(); ++i)
            pow3 *= 3;
        // ordered pairs (A, B), A and B disjoint, both non-empty: 3^n - 2*2^n + 1
        uint64_t disjoint = (pow3 - 2 * pow2(n.value()) + 1) / 2;
        return binomial(vertex_count(n), 2) - disjoint;
    }

    auto edge_count_recursive(GroundSize n) -> uint64_t
    {
        uint64_t edges = 0;
        uint64_t vertices = 1;
        for (unsigned k = 1; k < n.value(); ++k) {
            edges = 3 * edges + vertices + binomial(vertices + 1, 2);
            vertices = 2 * vertices + 1;
        }
        return edges;
    }

    auto edge_count_brute(GroundSize n) -> uint64_t
    {
        const std::uint32_t end = static_cast<std::uint32_t>(pow2(n.value()));
        uint64_t edges = 0;
        for (std::uint32_t u = 1; u < end; ++u)
            for (std::uint32_t v = u + 1; v < end; ++v)
                edges += adjacent(SubsetMask{u}, SubsetMask{v}) ? 1 : 0;
        return edges;
    }

    auto tightness(GroundSize n, SubsetMask m) -> uint64_t
    {
        auto c = SubsetMask::checked(n, m.bits);
        const std::uint32_t end = static_cast<std::uint32_t>(pow2(n.value()));
        uint64_t sum = 0;
        for (std::uint32_t other = 1; other < end; ++other)
            if (other != c.bits)
                sum += characteristic(c, SubsetMask{other});
        return sum;
    }

    auto tightness_vector(GroundSize n) -> TightnessVector
    {
        TightnessVector t{n.value(), {}};
        for (auto m : SetGraphSpec{n}.masks())
            t.values.push_back(tightness(n, m));
        return t;
    }

    auto tightness_recursion_step(GroundSize n, std::span<const uint64_t> old_values) -> TightnessVector
    {
        SetGraphSpec old_graph{n};
        if (old_values.size() != old_graph.vertex_count())
            throw InvalidArgument("expected " + to_string(old_graph.vertex_count()) + " tightness values for n="
                    + to_string(n.value()) + ", got " + to_string(old_values.size()));

        const uint64_t half = pow2(n.value());
        auto map = extension_map(n);
        TightnessVector result{n.value() + 1, {}};
        result.values.reserve(map.roles.size());
        for (std::size_t v = 0; v < map.roles.size(); ++v) {
            switch (map.roles[v]) {
                case ExtensionRole::new_singleton:
                    result.values.push_back(half - 1);
                    break;
                case ExtensionRole::erstwhile:
                    result.values.push_back(2 * old_values[old_graph.index_of(map.origin[v])] + 1);
                    break;
                case ExtensionRole::replica:
                    result.values.push_back(half + old_values[old_graph.index_of(map.origin[v])]);
                    break;
            }
        }
        return result;
    }

    auto degree_sum_closed(GroundSize n) -> uint64_t
    {
        uint64_t sum = 0;
        for (unsigned k = 1; k <= n.value(); ++k)
            sum += binomial(n.value(), k) * degree_closed(n, k);
        return sum;
    }
}

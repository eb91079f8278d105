#include <setgraph/error.hpp>
#include <setgraph/parameters.hpp>

#include <map>
#include <string>

using std::size_t;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace setgraph
{
    auto is_proper(const Coloring & c) -> bool
    {
        SetGraphSpec spec{GroundSize{c.n}};
        auto masks = spec.masks();
        if (c.colour.size() != masks.size())
            return false;
        for (size_t u = 0; u < masks.size(); ++u)
            for (size_t v = u + 1; v < masks.size(); ++v)
                if (c.colour[u] == c.colour[v] && adjacent(masks[u], masks[v]))
                    return false;
        return true;
    }

    auto clique_number(GroundSize n) -> uint64_t
    {
        return pow2(n.value() - 1);
    }

    auto clique_witness(GroundSize n) -> vector<SubsetMask>
    {
        vector<SubsetMask> star;
        for (auto m : SetGraphSpec{n}.masks())
            if (m.bits & 1u)
                star.push_back(m);
        return star;
    }

    auto max_cliques(const MaterializedGraph & g) -> CliqueSet
    {
        auto found = oracle::max_cliques_exact(oracle::SmallGraph{g});
        CliqueSet result{g.n(), found.clique_size, {}};
        for (const auto & clique : found.cliques) {
            vector<SubsetMask> masks;
            for (auto v : clique)
                masks.push_back(g.mask(v));
            result.cliques.push_back(std::move(masks));
        }
        return result;
    }

    auto chromatic_coloring(GroundSize n) -> Coloring
    {
        const auto full = SetGraphSpec{n}.full_mask().bits;
        std::map<std::uint32_t, unsigned> colour_of_pair; // keyed by the smaller of S and its complement
        Coloring c{n.value(), {}, 0};
        for (auto m : SetGraphSpec{n}.masks()) {
            auto key = m.bits == full ? full : std::min(m.bits, full & ~m.bits);
            auto [it, fresh] = colour_of_pair.try_emplace(key, c.colour_count);
            if (fresh)
                ++c.colour_count;
            c.colour.push_back(it->second);
        }
        return c;
    }

    auto chromatic_oracle(const MaterializedGraph & g) -> uint64_t
    {
        return oracle::chromatic_exact(oracle::SmallGraph{g});
    }

    auto independence_number(GroundSize n) -> Witnessed
    {
        Witnessed w{n.value(), {}};
        for (unsigned j = 0; j < n.value(); ++j)
            w.witness.push_back(SubsetMask{std::uint32_t{1} << j});
        return w;
    }

    auto independence_oracle(const MaterializedGraph & g) -> uint64_t
    {
        return oracle::mis_exact(oracle::SmallGraph{g});
    }

    auto domination(GroundSize n) -> Witnessed
    {
        return {1, {SetGraphSpec{n}.full_mask()}};
    }

    auto full_set_is_universal(GroundSize n) -> bool
    {
        auto full = SetGraphSpec{n}.full_mask();
        for (auto m : SetGraphSpec{n}.masks())
            if (m != full && ! adjacent(full, m))
                return false;
        return true;
    }

    auto domination_oracle(const MaterializedGraph & g) -> Witnessed
    {
        auto d = oracle::dominating_exact(oracle::SmallGraph{g});
        Witnessed w{d.size, {}};
        for (auto v : d.witness)
            w.witness.push_back(g.mask(v));
        return w;
    }

    auto bondage_number(GroundSize n) -> Bondage
    {
        if (n.value() < 2)
            throw RangeError("bondage number needs at least one edge (n>=2)");
        return {1, {SubsetMask{1}, SetGraphSpec{n}.full_mask()}};
    }

    auto bondage_oracle(const MaterializedGraph & g) -> std::optional<Bondage>
    {
        oracle::SmallGraph base{g};
        const auto gamma = oracle::dominating_exact(base).size;
        for (size_t u = 0; u < g.size(); ++u)
            for (size_t v = u + 1; v < g.size(); ++v) {
                if (! g.adjacent(u, v))
                    continue;
                auto reduced = base;
                reduced.remove_edge(u, v);
                if (oracle::dominating_exact(reduced).size > gamma)
                    return Bondage{1, {g.mask(u), g.mask(v)}};
            }
        return std::nullopt;
    }

    auto mcpherson_number(GroundSize n) -> uint64_t
    {
        return pow2(n.value() - 1) - 1;
    }

    auto disjointness_graph(const MaterializedGraph & g) -> oracle::SmallGraph
    {
        oracle::SmallGraph d{g.size()};
        for (size_t u = 0; u < g.size(); ++u)
            for (size_t v = u + 1; v < g.size(); ++v)
                if (! g.mask(u).intersects(g.mask(v)))
                    d.add_edge(u, v);
        return d;
    }

    auto mcpherson_oracle(const MaterializedGraph & g) -> uint64_t
    {
        return oracle::vertex_cover_exact(disjointness_graph(g));
    }

    ExplosionState::ExplosionState(const oracle::SmallGraph & base) :
        _base(base),
        _exploded(base.size(), false)
    {
    }

    auto ExplosionState::explode(size_t v) -> void
    {
        if (v >= _exploded.size())
            throw InvalidArgument("vertex " + to_string(v) + " not in graph");
        _exploded[v] = true;
    }

    auto ExplosionState::linked(size_t u, size_t v) const -> bool
    {
        return u != v && (_exploded[u] || _exploded[v] || _base.adjacent(u, v));
    }

    auto ExplosionState::complete() const -> bool
    {
        for (size_t u = 0; u < _base.size(); ++u)
            for (size_t v = u + 1; v < _base.size(); ++v)
                if (! linked(u, v))
                    return false;
        return true;
    }

    auto simulate_explosions(const oracle::SmallGraph & g, std::span<const size_t> order) -> ExplosionOutcome
    {
        ExplosionState state{g};
        if (state.complete())
            return {true, 0};
        for (size_t i = 0; i < order.size(); ++i) {
            state.explode(order[i]);
            if (state.complete())
                return {true, i + 1};
        }
        return {false, order.size()};
    }

    auto simulate_explosions(const MaterializedGraph & g, std::span<const SubsetMask> order) -> ExplosionOutcome
    {
        vector<size_t> indices;
        for (auto m : order)
            indices.push_back(g.index_of(SubsetMask::checked(g.spec().ground(), m.bits)));
        return simulate_explosions(oracle::SmallGraph{g}, indices);
    }
}

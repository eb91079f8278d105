#include <setgraph/core.hpp>
#include <setgraph/error.hpp>

#include <algorithm>
#include <bit>
#include <string>

using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace setgraph
{
    auto binomial(uint64_t n, uint64_t k) -> uint64_t
    {
        if (k > n)
            return 0;
        k = std::min(k, n - k);
        unsigned __int128 r = 1;
        for (uint64_t i = 1; i <= k; ++i) {
            r = r * (n - k + i) / i;
            if (r >> 64)
                throw RangeError("binomial(" + to_string(n) + ", " + to_string(k) + ") overflows 64 bits");
        }
        return static_cast<uint64_t>(r);
    }

    auto pow2(unsigned e) -> uint64_t
    {
        if (e >= 64)
            throw RangeError("2^" + to_string(e) + " overflows 64 bits");
        return uint64_t{1} << e;
    }

    GroundSize::GroundSize(unsigned n, unsigned cap) :
        _n(n)
    {
        cap = std::min(cap, max_count_n);
        if (n < 1 || n > cap)
            throw RangeError("ground set size " + to_string(n) + " outside 1.." + to_string(cap));
    }

    auto SubsetMask::cardinality() const -> unsigned
    {
        return static_cast<unsigned>(std::popcount(bits));
    }

    auto SubsetMask::checked(GroundSize n, uint64_t bits) -> SubsetMask
    {
        if (bits == 0)
            throw InvalidArgument("the empty subset is not a vertex");
        if (bits >= pow2(n.value()))
            throw InvalidArgument("mask " + to_string(bits) + " has elements outside a_1..a_" + to_string(n.value()));
        return SubsetMask{static_cast<std::uint32_t>(bits)};
    }

    auto subset_string(SubsetMask m) -> string
    {
        string s = "{";
        bool first = true;
        for (unsigned j = 0; j < 32; ++j)
            if ((m.bits >> j) & 1u) {
                if (! first)
                    s += ',';
                s += "a" + std::to_string(j + 1);
                first = false;
            }
        return s + "}";
    }

    auto vertex_count(GroundSize n) -> uint64_t
    {
        return pow2(n.value()) - 1;
    }

    SetGraphSpec::SetGraphSpec(GroundSize n) :
        _n(n),
        _class_start(n.value() + 2, 0)
    {
        // _class_start[s] is the canonical index of the first s-subset
        for (unsigned s = 1; s <= n.value(); ++s)
            _class_start[s + 1] = _class_start[s] + binomial(n.value(), s);
    }

    auto SetGraphSpec::vertex_count() const -> uint64_t
    {
        return setgraph::vertex_count(_n);
    }

    auto SetGraphSpec::full_mask() const -> SubsetMask
    {
        return SubsetMask{static_cast<std::uint32_t>(pow2(n()) - 1)};
    }

    // Masks of equal popcount ordered numerically are in colex order, whose
    // rank is sum over the j-th set bit (position p, 0-based j) of C(p, j+1).
    auto SetGraphSpec::label_of(SubsetMask m) const -> VertexLabel
    {
        auto c = SubsetMask::checked(_n, m.bits);
        uint64_t rank = 0;
        unsigned j = 0;
        for (unsigned p = 0; p < n(); ++p)
            if ((c.bits >> p) & 1u)
                rank += binomial(p, ++j);
        return VertexLabel{c.cardinality(), rank + 1};
    }

    auto SetGraphSpec::mask_of(VertexLabel l) const -> SubsetMask
    {
        if (l.s < 1 || l.s > n())
            throw InvalidArgument("label cardinality " + to_string(l.s) + " outside 1.." + to_string(n()));
        if (l.i < 1 || l.i > binomial(n(), l.s))
            throw InvalidArgument("label v_" + to_string(l.s) + "," + to_string(l.i) + " exceeds C(" + to_string(n()) + ", " + to_string(l.s) + ")");

        uint64_t rank = l.i - 1;
        std::uint32_t bits = 0;
        unsigned p = n();
        for (unsigned j = l.s; j >= 1; --j) {
            // largest position p with C(p, j) <= rank
            do
                --p;
            while (binomial(p, j) > rank);
            bits |= std::uint32_t{1} << p;
            rank -= binomial(p, j);
        }
        return SubsetMask{bits};
    }

    auto SetGraphSpec::index_of(SubsetMask m) const -> std::size_t
    {
        auto l = label_of(m);
        return static_cast<std::size_t>(_class_start[l.s] + l.i - 1);
    }

    auto SetGraphSpec::mask_at(std::size_t index) const -> SubsetMask
    {
        if (index >= vertex_count())
            throw RangeError("vertex index " + to_string(index) + " outside graph of order " + to_string(vertex_count()));
        unsigned s = 1;
        while (_class_start[s + 1] <= index)
            ++s;
        return mask_of(VertexLabel{s, index - _class_start[s] + 1});
    }

    auto SetGraphSpec::masks() const -> vector<SubsetMask>
    {
        vector<SubsetMask> result;
        result.reserve(vertex_count());
        for (std::uint32_t b = 1; b < pow2(n()); ++b)
            result.push_back(SubsetMask{b});
        std::stable_sort(result.begin(), result.end(), [] (SubsetMask a, SubsetMask b) {
            return a.cardinality() < b.cardinality();
        });
        return result;
    }

    auto label_of_mask(GroundSize n, SubsetMask m) -> VertexLabel
    {
        return SetGraphSpec{n}.label_of(m);
    }

    auto mask_of_label(GroundSize n, VertexLabel l) -> SubsetMask
    {
        return SetGraphSpec{n}.mask_of(l);
    }

    MaterializedGraph::MaterializedGraph(GroundSize n) :
        _spec(n),
        _masks(_spec.masks()),
        _rows(_masks.size())
    {
    }

    auto MaterializedGraph::edge_count() const -> uint64_t
    {
        uint64_t twice = 0;
        for (std::size_t v = 0; v < size(); ++v)
            twice += degree(v);
        return twice / 2;
    }

    auto materialize_bytes(unsigned n) -> uint64_t
    {
        uint64_t v = pow2(n) - 1;
        return v * BitRows::words_for(v) * sizeof(uint64_t);
    }

    auto materialize(GroundSize n, unsigned cap) -> MaterializedGraph
    {
        cap = std::min(cap, max_materialize_n);
        if (n.value() > cap)
            throw ResourceError("materializing n=" + to_string(n.value()) + " needs about "
                    + to_string((materialize_bytes(n.value()) + (1u << 20) - 1) >> 20)
                    + " MiB of adjacency bits; materialization cap is n<=" + to_string(cap));

        MaterializedGraph g{n};
        const auto order = g.size();
        const auto words = g._rows.words_per_row();

        // star[e]: every vertex containing a_{e+1}
        vector<vector<uint64_t>> star(n.value(), vector<uint64_t>(words, 0));
        for (std::size_t v = 0; v < order; ++v)
            for (unsigned e = 0; e < n.value(); ++e)
                if ((g._masks[v].bits >> e) & 1u)
                    star[e][v / 64] |= uint64_t{1} << (v % 64);

        for (std::size_t u = 0; u < order; ++u) {
            auto row = g._rows.row(u);
            for (unsigned e = 0; e < n.value(); ++e)
                if ((g._masks[u].bits >> e) & 1u)
                    for (std::size_t w = 0; w < words; ++w)
                        row[w] |= star[e][w];
            g._rows.reset(u, u);
        }
        return g;
    }

    auto ExtensionMap::count(ExtensionRole r) const -> std::size_t
    {
        return static_cast<std::size_t>(std::count(roles.begin(), roles.end(), r));
    }

    auto replica_of(GroundSize n, SubsetMask m) -> SubsetMask
    {
        auto c = SubsetMask::checked(n, m.bits);
        return SubsetMask{c.bits | (std::uint32_t{1} << n.value())};
    }

    auto extension_map(GroundSize n) -> ExtensionMap
    {
        GroundSize next{n.value() + 1};
        const std::uint32_t new_bit = std::uint32_t{1} << n.value();

        ExtensionMap map{n, {}, {}};
        for (auto m : SetGraphSpec{next}.masks()) {
            if (m.bits == new_bit) {
                map.roles.push_back(ExtensionRole::new_singleton);
                map.origin.push_back(SubsetMask{});
            }
            else if (m.bits & new_bit) {
                map.roles.push_back(ExtensionRole::replica);
                map.origin.push_back(SubsetMask{m.bits & ~new_bit});
            }
            else {
                map.roles.push_back(ExtensionRole::erstwhile);
                map.origin.push_back(m);
            }
        }
        return map;
    }
}

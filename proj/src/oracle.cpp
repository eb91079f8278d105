#include <setgraph/error.hpp>
#include <setgraph/oracle.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace setgraph::oracle
{
    namespace
    {
        auto guard(const SmallGraph & g, size_t cap, const char * what) -> void
        {
            if (g.size() > cap)
                throw ResourceError(string(what) + " oracle limited to " + to_string(cap)
                        + " vertices, graph has " + to_string(g.size()));
        }

        /// Neighbourhoods as single words, for graphs of at most 64 vertices.
        auto word_rows(const SmallGraph & g) -> vector<uint64_t>
        {
            vector<uint64_t> nbr(g.size(), 0);
            for (size_t v = 0; v < g.size(); ++v)
                nbr[v] = g.rows().row(v)[0];
            return nbr;
        }

        auto bit(size_t v) -> uint64_t { return uint64_t{1} << v; }
        auto count(uint64_t m) -> size_t { return static_cast<size_t>(std::popcount(m)); }
        auto lowest(uint64_t m) -> size_t { return static_cast<size_t>(std::countr_zero(m)); }
        auto all_of(size_t n) -> uint64_t { return n == 64 ? ~uint64_t{0} : bit(n) - 1; }
    }

    auto SmallGraph::edge_count() const -> uint64_t
    {
        uint64_t twice = 0;
        for (size_t v = 0; v < size(); ++v)
            twice += _rows.row_count(v);
        return twice / 2;
    }

    auto SmallGraph::add_edge(size_t u, size_t v) -> void
    {
        if (u == v)
            return;
        _rows.set(u, v);
        _rows.set(v, u);
    }

    auto SmallGraph::remove_edge(size_t u, size_t v) -> void
    {
        _rows.reset(u, v);
        _rows.reset(v, u);
    }

    auto SmallGraph::complete(size_t m) -> SmallGraph
    {
        SmallGraph g{m};
        for (size_t u = 0; u < m; ++u)
            for (size_t v = u + 1; v < m; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto SmallGraph::path(size_t m) -> SmallGraph
    {
        SmallGraph g{m};
        for (size_t v = 1; v < m; ++v)
            g.add_edge(v - 1, v);
        return g;
    }

    auto SmallGraph::edgeless(size_t m) -> SmallGraph
    {
        return SmallGraph{m};
    }

    auto complement(const SmallGraph & g) -> SmallGraph
    {
        SmallGraph c{g.size()};
        for (size_t u = 0; u < g.size(); ++u)
            for (size_t v = u + 1; v < g.size(); ++v)
                if (! g.adjacent(u, v))
                    c.add_edge(u, v);
        return c;
    }

    auto relabel(const SmallGraph & g, std::span<const size_t> perm) -> SmallGraph
    {
        if (perm.size() != g.size())
            throw InvalidArgument("permutation length does not match graph order");
        SmallGraph r{g.size()};
        for (size_t u = 0; u < g.size(); ++u)
            for (size_t v = u + 1; v < g.size(); ++v)
                if (g.adjacent(u, v))
                    r.add_edge(perm[u], perm[v]);
        return r;
    }

    namespace
    {
        template <typename F>
        auto for_each_triangle(const SmallGraph & g, F && f) -> void
        {
            guard(g, max_triangle_vertices, "triangle");
            const auto n = g.size();
            for (size_t a = 0; a < n; ++a)
                for (size_t b = a + 1; b < n; ++b) {
                    if (! g.adjacent(a, b))
                        continue;
                    for (size_t c = b + 1; c < n; ++c)
                        if (g.adjacent(a, c) && g.adjacent(b, c))
                            f(a, b, c);
                }
        }
    }

    auto enum_triangles(const SmallGraph & g) -> vector<Triple>
    {
        vector<Triple> result;
        for_each_triangle(g, [&] (size_t a, size_t b, size_t c) { result.push_back({a, b, c}); });
        return result;
    }

    auto count_triangles(const SmallGraph & g) -> uint64_t
    {
        uint64_t count = 0;
        for_each_triangle(g, [&] (size_t, size_t, size_t) { ++count; });
        return count;
    }

    auto count_triangles_through(const SmallGraph & g, size_t v) -> uint64_t
    {
        guard(g, max_triangle_vertices, "triangle");
        uint64_t count = 0;
        for (size_t a = 0; a < g.size(); ++a)
            if (g.adjacent(v, a))
                for (size_t b = a + 1; b < g.size(); ++b)
                    if (g.adjacent(v, b) && g.adjacent(a, b))
                        ++count;
        return count;
    }

    auto max_cliques_exact(const SmallGraph & g) -> CliqueList
    {
        guard(g, max_clique_vertices, "clique");
        const auto nbr = word_rows(g);
        CliqueList best;
        vector<size_t> current;

        std::function<void (uint64_t, uint64_t)> expand = [&] (uint64_t candidates, uint64_t excluded) {
            if (candidates == 0 && excluded == 0) {
                if (current.size() > best.clique_size) {
                    best.clique_size = current.size();
                    best.cliques.clear();
                }
                if (current.size() == best.clique_size) {
                    auto c = current;
                    std::sort(c.begin(), c.end());
                    best.cliques.push_back(std::move(c));
                }
                return;
            }
            if (current.size() + count(candidates) < best.clique_size)
                return;

            size_t pivot = lowest(candidates | excluded);
            size_t pivot_hits = 0;
            for (auto m = candidates | excluded; m; m &= m - 1) {
                auto u = lowest(m);
                if (auto hits = count(candidates & nbr[u]); hits > pivot_hits) {
                    pivot = u;
                    pivot_hits = hits;
                }
            }

            for (auto branch = candidates & ~nbr[pivot]; branch; branch &= branch - 1) {
                auto v = lowest(branch);
                current.push_back(v);
                expand(candidates & nbr[v], excluded & nbr[v]);
                current.pop_back();
                candidates &= ~bit(v);
                excluded |= bit(v);
            }
        };

        if (g.size() > 0)
            expand(all_of(g.size()), 0);
        std::sort(best.cliques.begin(), best.cliques.end());
        return best;
    }

    auto chromatic_exact(const SmallGraph & g) -> size_t
    {
        guard(g, max_chromatic_vertices, "chromatic");
        const auto n = g.size();
        if (n == 0)
            return 0;

        vector<size_t> order(n);
        for (size_t v = 0; v < n; ++v)
            order[v] = v;
        std::stable_sort(order.begin(), order.end(), [&] (size_t a, size_t b) {
            return g.rows().row_count(a) > g.rows().row_count(b);
        });

        vector<int> colour(n, -1);
        std::function<bool (size_t, int, int)> extend = [&] (size_t pos, int used, int k) -> bool {
            if (pos == n)
                return true;
            auto v = order[pos];
            // a new colour only as the next unused one
            for (int c = 0; c < std::min(used + 1, k); ++c) {
                bool clash = false;
                for (size_t p = 0; p < pos && ! clash; ++p)
                    clash = colour[order[p]] == c && g.adjacent(v, order[p]);
                if (clash)
                    continue;
                colour[v] = c;
                if (extend(pos + 1, std::max(used, c + 1), k))
                    return true;
                colour[v] = -1;
            }
            return false;
        };

        for (auto k = max_cliques_exact(g).clique_size; k <= n; ++k)
            if (extend(0, 0, static_cast<int>(k)))
                return k;
        return n;
    }

    auto mis_exact(const SmallGraph & g) -> size_t
    {
        guard(g, max_search_vertices, "independent set");
        const auto nbr = word_rows(g);

        std::function<size_t (uint64_t)> solve = [&] (uint64_t live) -> size_t {
            if (live == 0)
                return 0;
            size_t pick = lowest(live), pick_degree = count(nbr[pick] & live);
            size_t low = pick, low_degree = pick_degree;
            for (auto m = live; m; m &= m - 1) {
                auto v = lowest(m);
                auto d = count(nbr[v] & live);
                if (d > pick_degree)
                    pick = v, pick_degree = d;
                if (d < low_degree)
                    low = v, low_degree = d;
            }
            // a vertex of degree <= 1 belongs to some maximum independent set
            if (low_degree <= 1)
                return 1 + solve(live & ~nbr[low] & ~bit(low));
            return std::max(solve(live & ~bit(pick)), 1 + solve(live & ~nbr[pick] & ~bit(pick)));
        };

        return solve(all_of(g.size()));
    }

    auto dominating_exact(const SmallGraph & g) -> DominatingSet
    {
        guard(g, max_search_vertices, "dominating set");
        const auto n = g.size();
        const auto nbr = word_rows(g);
        vector<size_t> chosen;

        // iterative deepening; branch over the closed neighbourhood of the first undominated vertex
        std::function<bool (uint64_t, size_t)> search = [&] (uint64_t undominated, size_t budget) -> bool {
            if (undominated == 0)
                return true;
            if (budget == 0)
                return false;
            auto u = lowest(undominated);
            for (auto options = nbr[u] | bit(u); options; options &= options - 1) {
                auto v = lowest(options);
                chosen.push_back(v);
                if (search(undominated & ~(nbr[v] | bit(v)), budget - 1))
                    return true;
                chosen.pop_back();
            }
            return false;
        };

        for (size_t k = 0; k <= n; ++k) {
            chosen.clear();
            if (search(all_of(n), k)) {
                std::sort(chosen.begin(), chosen.end());
                return {k, chosen};
            }
        }
        throw std::logic_error("no dominating set found");
    }

    auto vertex_cover_exact(const SmallGraph & g) -> size_t
    {
        guard(g, max_search_vertices, "vertex cover");
        const auto nbr = word_rows(g);
        size_t best = g.size();

        // either v is in the cover, or all of its remaining neighbours are
        std::function<void (uint64_t, size_t)> solve = [&] (uint64_t live, size_t taken) {
            if (taken >= best)
                return;
            size_t v = 0, degree = 0;
            for (auto m = live; m; m &= m - 1) {
                auto u = lowest(m);
                if (auto d = count(nbr[u] & live); d > degree)
                    v = u, degree = d;
            }
            if (degree == 0) {
                best = taken;
                return;
            }
            solve(live & ~bit(v), taken + 1);
            if (degree > 1)
                solve(live & ~(nbr[v] & live) & ~bit(v), taken + degree);
        };

        solve(all_of(g.size()), 0);
        return best;
    }
}

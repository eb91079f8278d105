#include <setgraph/error.hpp>
#include <setgraph/holes.hpp>
#include <setgraph/invariants.hpp>

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

using std::to_string;
using std::uint64_t;
using std::vector;

namespace setgraph
{
    namespace
    {
        using u128 = unsigned __int128;

        template <typename F>
        auto parallel_rows(std::size_t rows, unsigned threads, F && per_row) -> uint64_t
        {
            constexpr std::size_t chunk = 32;
            std::atomic<std::size_t> next{0};
            std::atomic<uint64_t> total{0};
            auto worker = [&] {
                uint64_t local = 0;
                for (std::size_t start; (start = next.fetch_add(chunk)) < rows; )
                    for (std::size_t u = start; u < std::min(rows, start + chunk); ++u)
                        local += per_row(u);
                total += local;
            };

            threads = std::max(1u, threads);
            if (threads == 1)
                worker();
            else {
                vector<std::jthread> pool;
                for (unsigned t = 0; t < threads; ++t)
                    pool.emplace_back(worker);
            }
            return total.load();
        }

        auto narrow(u128 v, const char * what) -> uint64_t
        {
            if (v >> 64)
                throw RangeError(std::string(what) + " overflows 64 bits");
            return static_cast<uint64_t>(v);
        }
    }

    auto triangle_count_exact(const MaterializedGraph & g, unsigned threads) -> uint64_t
    {
        const auto & rows = g.rows();
        return parallel_rows(g.size(), threads, [&] (std::size_t u) {
            uint64_t count = 0;
            auto row_u = rows.row(u);
            for (std::size_t w = (u + 1) / 64; w < row_u.size(); ++w) {
                auto bits = row_u[w];
                if (w == (u + 1) / 64)
                    bits &= ~uint64_t{0} << ((u + 1) % 64);
                while (bits) {
                    std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                    bits &= bits - 1;
                    count += and_count_after(row_u, rows.row(v), v);
                }
            }
            return count;
        });
    }

    auto triangle_count_paper(GroundSize n) -> uint64_t
    {
        if (n.value() < 2)
            throw RangeError("the hole recursion starts at n=2");
        uint64_t h = 0;
        for (unsigned k = 2; k < n.value(); ++k)
            h += binomial(pow2(k), 3) + 4 * edge_count_closed(GroundSize{k});
        return h;
    }

    auto triangle_count_corrected(GroundSize n) -> uint64_t
    {
        if (n.value() > max_holes_n)
            throw RangeError("hole recursion limited to n<=" + to_string(max_holes_n));

        u128 h = 0;
        for (unsigned k = 1; k < n.value(); ++k) {
            const u128 half = pow2(k);
            auto p = [k] (unsigned c) -> u128 { return pow2(k - c); };

            // ordered intersecting pairs S != T, classed by |S|, |T|, |S n T|
            u128 edge_sum = 0;
            for (unsigned s = 1; s <= k; ++s)
                for (unsigned t = 1; t <= k; ++t)
                    for (unsigned j = 1; j <= std::min(s, t); ++j) {
                        if (t - j > k - s || (j == s && j == t))
                            continue;
                        u128 pairs = u128{binomial(k, s)} * binomial(s, j) * binomial(k - s, t - j);
                        u128 common = half - p(s) - p(t) + p(s + t - j);
                        edge_sum += pairs * common;
                    }

            u128 vertex_sum = 0;
            for (unsigned s = 1; s <= k; ++s) {
                u128 reach = half - p(s); // replicas meeting an s-subset
                vertex_sum += u128{binomial(k, s)} * (reach * (reach - 1) / 2);
            }

            h += u128{binomial(pow2(k), 3)} + edge_sum / 2 + vertex_sum;
        }
        return narrow(h, "triangle count");
    }

    auto primitive_degree(const MaterializedGraph & g, std::size_t v) -> uint64_t
    {
        const auto & rows = g.rows();
        auto row_v = rows.row(v);
        uint64_t twice = 0;
        for (std::size_t w = 0; w < row_v.size(); ++w)
            for (auto bits = row_v[w]; bits; bits &= bits - 1) {
                auto u = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                twice += and_count(row_v, rows.row(u));
            }
        return twice / 2;
    }

    auto primitive_degrees(const MaterializedGraph & g, unsigned threads) -> vector<uint64_t>
    {
        vector<uint64_t> result(g.size(), 0);
        parallel_rows(g.size(), threads, [&] (std::size_t v) {
            result[v] = primitive_degree(g, v);
            return uint64_t{0};
        });
        return result;
    }

    auto apex_primitive_degree(GroundSize n) -> uint64_t
    {
        return edge_count_closed(n) - degree_extremes(n).max;
    }

    auto h_complete(uint64_t m) -> uint64_t
    {
        return binomial(m, 3);
    }

    auto hole_report(GroundSize n, const HoleOptions & options) -> HoleReport
    {
        HoleReport r{n.value(), std::nullopt, std::nullopt, std::nullopt, apex_primitive_degree(n), {}};
        if (n.value() >= 2)
            r.h_paper_formula = triangle_count_paper(n);
        if (n.value() <= max_holes_n)
            r.h_corrected = triangle_count_corrected(n);
        if (n.value() <= std::min(options.triangle_cap, options.materialize_cap)) {
            auto g = materialize(n, options.materialize_cap);
            r.h_exact = triangle_count_exact(g, options.threads);
            for (auto d : primitive_degrees(g, options.threads))
                ++r.primitive_degree_histogram[d];
        }
        return r;
    }
}

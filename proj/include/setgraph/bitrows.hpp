#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace setgraph
{
    /**
     * Square bit matrix stored as packed 64-bit rows. Row u holds bit v iff
     * (u, v) is set. Used as the adjacency store for both set-graphs and
     * arbitrary small oracle graphs.
     */
    class BitRows
    {
    public:
        BitRows() = default;

        explicit BitRows(std::size_t size) :
            _size(size),
            _words(words_for(size)),
            _bits(size * words_for(size), 0)
        {
        }

        static constexpr auto words_for(std::size_t bits) -> std::size_t
        {
            return (bits + 63) / 64;
        }

        auto size() const -> std::size_t { return _size; }
        auto words_per_row() const -> std::size_t { return _words; }

        auto test(std::size_t row, std::size_t col) const -> bool
        {
            return (_bits[row * _words + col / 64] >> (col % 64)) & 1u;
        }

        auto set(std::size_t row, std::size_t col) -> void
        {
            _bits[row * _words + col / 64] |= std::uint64_t{1} << (col % 64);
        }

        auto reset(std::size_t row, std::size_t col) -> void
        {
            _bits[row * _words + col / 64] &= ~(std::uint64_t{1} << (col % 64));
        }

        auto row(std::size_t r) const -> std::span<const std::uint64_t>
        {
            return {_bits.data() + r * _words, _words};
        }

        auto row(std::size_t r) -> std::span<std::uint64_t>
        {
            return {_bits.data() + r * _words, _words};
        }

        auto row_count(std::size_t r) const -> std::size_t
        {
            std::size_t c = 0;
            for (auto w : row(r))
                c += static_cast<std::size_t>(std::popcount(w));
            return c;
        }

        auto operator==(const BitRows &) const -> bool = default;

    private:
        std::size_t _size = 0;
        std::size_t _words = 0;
        std::vector<std::uint64_t> _bits;
    };

    /// popcount(a AND b) over whole rows.
    inline auto and_count(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) -> std::uint64_t
    {
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            c += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
        return c;
    }

    /// popcount(a AND b) restricted to bit positions strictly greater than `after`.
    inline auto and_count_after(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b, std::size_t after) -> std::uint64_t
    {
        std::size_t first = after + 1;
        std::size_t w = first / 64;
        if (w >= a.size())
            return 0;
        std::uint64_t c = static_cast<std::uint64_t>(std::popcount(a[w] & b[w] & (~std::uint64_t{0} << (first % 64))));
        for (++w; w < a.size(); ++w)
            c += static_cast<std::uint64_t>(std::popcount(a[w] & b[w]));
        return c;
    }
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace setgraph
{
    /// Largest index with m_i exact in 64 bits.
    inline constexpr unsigned max_mela_index = 62;
    /// Largest index whose pairwise products stay exact.
    inline constexpr unsigned max_closure_index = 31;

    /// m_1 = 1, m_i = 2 m_(i-1) + 1; values[i-1] holds m_i.
    struct MelaSequence
    {
        std::vector<std::uint64_t> values;

        auto at(unsigned i) const -> std::uint64_t { return values.at(i - 1); }
    };

    auto mela(unsigned k) -> MelaSequence;

    /// x = 2^i - 1 for some i >= 1.
    auto is_mela(std::uint64_t x) -> bool;

    struct MelaFailure
    {
        unsigned i;
        unsigned j;
        std::string relation; // "sum", "product", "difference", "divides", "quotient"
        std::uint64_t value;
    };

    struct MelaCheck
    {
        /// Result over the nontrivial range (indices >= 2).
        std::optional<MelaFailure> failure;
        /// First failure when index 1 is admitted as well.
        std::optional<MelaFailure> degenerate_failure;
        std::uint64_t cases = 0;
        std::vector<std::string> notes;
    };

    /**
     * For all i, j <= max_index: m_i + m_j, m_i m_j and (when m_i > m_j)
     * m_i - m_j are not Mela numbers.
     */
    auto check_closure(unsigned max_index) -> MelaCheck;

    /**
     * For 2 <= i <= max_i and 2 <= k <= max_k with i k <= 62: m_i divides
     * m_(ki) and the quotient is not a Mela number. Pairs beyond the
     * exactness cap are skipped and noted.
     */
    auto check_divisibility(unsigned max_i, unsigned max_k) -> MelaCheck;

    auto describe(const MelaFailure & f) -> std::string;
}

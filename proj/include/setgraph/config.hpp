#pragma once

#include <setgraph/core.hpp>
#include <setgraph/holes.hpp>
#include <setgraph/parameters.hpp>

#include <string>

namespace setgraph
{
    inline constexpr const char * canonical_order_version = "cardinality-then-mask/1";

    /**
     * Run-wide settings shared by the verify harness, reports and the CLI.
     * validate() rejects caps above the compiled safety limits.
     */
    struct Config
    {
        unsigned max_n = max_count_n;
        unsigned count_cap = max_count_n;
        unsigned materialize_cap = default_materialize_cap;
        unsigned triangle_cap = default_triangle_cap;
        unsigned holes_cap = max_holes_n;
        OracleCaps oracle;
        unsigned mela_max_index = 20;
        unsigned threads = 1;
        bool timestamp = false;
        std::string order_version = canonical_order_version;

        auto validate() const -> void;
    };
}

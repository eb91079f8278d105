#pragma once

#include <setgraph/config.hpp>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace setgraph::verify
{
    enum class Status
    {
        confirmed,
        refuted,
        skipped
    };

    auto status_name(Status s) -> const char *;

    struct Counterexample
    {
        unsigned n;
        std::string expected;
        std::string actual;
        std::string witness;
    };

    struct ClaimVerdict
    {
        std::string id;
        std::string description;
        std::string anchor;
        std::vector<unsigned> n_tested;
        Status status = Status::skipped;
        std::optional<Counterexample> counterexample;
        std::vector<std::string> notes;
    };

    /// A value observed by an oracle or closed route, with an optional witness.
    struct Observation
    {
        std::string value;
        std::string witness = {};
    };

    using Evaluator = std::function<std::string (unsigned n, const Config &)>;
    using Route = std::function<Observation (unsigned n, const Config &)>;

    /**
     * One checkable statement. `formula` gives what the statement predicts at
     * n; `oracle` observes the truth by independent search for n up to
     * `oracle_cap`; `closed`, when present, is a second independent route used
     * for n beyond the oracle cap up to `closed_cap`. Index-ranged claims
     * supply `custom` instead.
     */
    struct Claim
    {
        std::string id;
        std::string description;
        std::string anchor;
        unsigned min_n = 1;
        std::function<unsigned (const Config &)> oracle_cap;
        Evaluator formula;
        Route oracle;
        std::function<unsigned (const Config &)> closed_cap = {};
        Route closed = {};
        std::string closed_name = {};
        std::function<void (ClaimVerdict &, const Config &)> annotate = {};
        std::function<ClaimVerdict (const Claim &, const Config &)> custom = {};
    };

    auto registry() -> const std::vector<Claim> &;
    auto find_claim(const std::string & id) -> const Claim &;

    /// "all" or a comma-separated id list; throws InvalidArgument on unknown ids.
    auto parse_selection(const std::string & text) -> std::vector<std::string>;

    auto run_claim(const Claim & claim, const Config & config) -> ClaimVerdict;

    /// Verdicts in registry order, whatever the selection order.
    auto run_claims(std::span<const std::string> selection, const Config & config) -> std::vector<ClaimVerdict>;

    /// Recomputes the observed value at a REFUTED verdict's counterexample.
    auto reverify(const ClaimVerdict & verdict, const Config & config) -> bool;

    enum class Format
    {
        json,
        markdown
    };

    auto parse_format(const std::string & text) -> Format;

    auto render_report(std::span<const ClaimVerdict> verdicts, Format format, const Config & config) -> std::string;
}

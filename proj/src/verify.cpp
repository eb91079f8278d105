#include <setgraph/error.hpp>
#include <setgraph/holes.hpp>
#include <setgraph/invariants.hpp>
#include <setgraph/mela.hpp>
#include <setgraph/oracle.hpp>
#include <setgraph/parameters.hpp>
#include <setgraph/verify.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace setgraph
{
    auto Config::validate() const -> void
    {
        auto check = [] (const char * name, unsigned value, unsigned low, unsigned high) {
            if (value < low || value > high)
                throw RangeError(string(name) + " = " + to_string(value) + " outside " + to_string(low) + ".." + to_string(high));
        };
        check("max_n", max_n, 1, max_count_n);
        check("count_cap", count_cap, 1, max_count_n);
        check("materialize_cap", materialize_cap, 1, max_materialize_n);
        check("triangle_cap", triangle_cap, 1, max_materialize_n);
        check("holes_cap", holes_cap, 1, max_holes_n);
        check("oracle.cliques", oracle.cliques, 1, 6);
        check("oracle.chromatic", oracle.chromatic, 1, 4);
        check("oracle.independence", oracle.independence, 1, 5);
        check("oracle.domination", oracle.domination, 1, 5);
        check("oracle.bondage", oracle.bondage, 1, 5);
        check("oracle.vertex_cover", oracle.vertex_cover, 1, 5);
        check("mela_max_index", mela_max_index, 2, max_mela_index);
        check("threads", threads, 1, 256);
    }
}

namespace setgraph::verify
{
    namespace
    {
        auto str(uint64_t v) -> string { return to_string(v); }

        template <typename Range, typename F>
        auto join(const Range & items, F && render, const char * sep = ",") -> string
        {
            string out;
            bool first = true;
            for (const auto & item : items) {
                if (! first)
                    out += sep;
                out += render(item);
                first = false;
            }
            return out;
        }

        auto list(const vector<uint64_t> & v) -> string
        {
            return "[" + join(v, [] (uint64_t x) { return str(x); }) + "]";
        }

        auto fixed(unsigned cap) { return [cap] (const Config &) { return cap; }; }

        auto graph(unsigned n, const Config & config) -> MaterializedGraph
        {
            return materialize(GroundSize{n}, config.materialize_cap);
        }

        struct DegreeScan
        {
            uint64_t min = ~uint64_t{0};
            uint64_t max = 0;
            vector<SubsetMask> at_max;
        };

        auto scan_degrees(const MaterializedGraph & g) -> DegreeScan
        {
            DegreeScan s;
            for (std::size_t v = 0; v < g.size(); ++v) {
                auto d = g.degree(v);
                s.min = std::min(s.min, d);
                if (d > s.max) {
                    s.max = d;
                    s.at_max.clear();
                }
                if (d == s.max)
                    s.at_max.push_back(g.mask(v));
            }
            return s;
        }

        auto parity(uint64_t v) -> const char * { return v % 2 ? "odd" : "even"; }

        auto render_cliques(const CliqueSet & c) -> string
        {
            constexpr std::size_t shown = 8;
            string out;
            for (std::size_t i = 0; i < std::min(shown, c.cliques.size()); ++i)
                out += (i ? "; " : "") + string("{") + join(c.cliques[i], subset_string) + "}";
            if (c.cliques.size() > shown)
                out += "; ... (" + str(c.cliques.size() - shown) + " more)";
            return out;
        }

        auto first_difference(const string & a, const string & b) -> string
        {
            // both are "[x,y,...]" lists in canonical order
            std::istringstream sa{a.substr(1)}, sb{b.substr(1)};
            string ta, tb;
            for (std::size_t i = 0; std::getline(sa, ta, ',') && std::getline(sb, tb, ','); ++i)
                if (ta != tb)
                    return "first difference at canonical index " + str(i);
            return "lists differ in length";
        }

        auto mela_verdict(const Claim & claim, const MelaCheck & check, unsigned max_index) -> ClaimVerdict
        {
            ClaimVerdict v{claim.id, claim.description, claim.anchor, {}, Status::confirmed, std::nullopt, check.notes};
            for (unsigned i = 1; i <= max_index; ++i)
                v.n_tested.push_back(i);
            v.notes.insert(v.notes.begin(), "indices 1.." + str(max_index) + ", " + str(check.cases) + " cases; status decided on indices >= 2");
            if (check.failure) {
                v.status = Status::refuted;
                v.counterexample = Counterexample{max_index, "no Mela number", describe(*check.failure),
                    "i=" + str(check.failure->i) + ", j=" + str(check.failure->j)};
            }
            return v;
        }

        auto closure_claim(const Claim & claim, const Config & config) -> ClaimVerdict
        {
            auto top = std::min(config.mela_max_index, max_closure_index);
            auto v = mela_verdict(claim, check_closure(top), top);
            if (top < config.mela_max_index)
                v.notes.push_back("clamped to index " + str(top) + " (products exact in 64 bits)");
            return v;
        }

        auto divisibility_claim(const Claim & claim, const Config & config) -> ClaimVerdict
        {
            return mela_verdict(claim, check_divisibility(config.mela_max_index, config.mela_max_index), config.mela_max_index);
        }

        auto build_registry() -> vector<Claim>
        {
            vector<Claim> r;

            r.push_back({"C1", "G(n) has 2^n - 1 vertices, an odd number", "odd-order proposition", 1, fixed(16),
                [] (unsigned n, const Config &) {
                    auto v = vertex_count(GroundSize{n});
                    return str(v) + " " + parity(v);
                },
                [] (unsigned n, const Config &) {
                    uint64_t count = 0;
                    for (uint64_t m = 0; m < (uint64_t{1} << n); ++m)
                        count += m != 0;
                    return Observation{str(count) + " " + parity(count)};
                }});

            r.push_back({"C2", "vertices of equal cardinality have equal degree", "equal-cardinality degree theorem", 2, fixed(10),
                [] (unsigned n, const Config &) { return list(degree_profile(GroundSize{n}).by_cardinality); },
                [] (unsigned n, const Config & config) {
                    auto g = graph(n, config);
                    vector<std::map<uint64_t, SubsetMask>> seen(n);
                    for (std::size_t v = 0; v < g.size(); ++v) {
                        auto m = g.mask(v);
                        auto brute = g.degree(v);
                        auto ie = degree_inclusion_exclusion(GroundSize{n}, m);
                        if (ie != brute)
                            return Observation{"inclusion-exclusion " + str(ie) + " != brute " + str(brute), subset_string(m)};
                        seen[m.cardinality() - 1].emplace(brute, m);
                    }
                    string out = "[";
                    string witness;
                    for (unsigned k = 0; k < n; ++k) {
                        out += (k ? "," : "") + join(seen[k], [] (const auto & e) { return str(e.first); }, "|");
                        if (seen[k].size() > 1 && witness.empty())
                            witness = join(seen[k], [] (const auto & e) { return subset_string(e.second); }, " vs ");
                    }
                    return Observation{out + "]", witness};
                }});

            r.push_back({"C3", "2^(n-1) - 1 <= degree <= 2(2^(n-1) - 1)", "degree-bound theorem", 2, fixed(12),
                [] (unsigned n, const Config &) {
                    auto e = degree_extremes(GroundSize{n});
                    return "[" + str(e.min) + "," + str(e.max) + "]";
                },
                [] (unsigned n, const Config & config) {
                    auto s = scan_degrees(graph(n, config));
                    return Observation{"[" + str(s.min) + "," + str(s.max) + "]"};
                }});

            r.push_back({"C4", "maximum degree is twice the minimum degree", "corollary Delta = 2 delta", 2, fixed(12),
                [] (unsigned, const Config &) { return string("holds"); },
                [] (unsigned n, const Config & config) {
                    auto s = scan_degrees(graph(n, config));
                    return Observation{s.max == 2 * s.min ? "holds" : "fails: Delta=" + str(s.max) + ", delta=" + str(s.min)};
                }});

            r.push_back({"C5", "the full set is the unique vertex of maximum degree", "corollary unique maximum-degree vertex", 2, fixed(12),
                [] (unsigned n, const Config &) { return subset_string(SetGraphSpec{GroundSize{n}}.full_mask()); },
                [] (unsigned n, const Config & config) {
                    auto s = scan_degrees(graph(n, config));
                    return Observation{join(s.at_max, subset_string, ";")};
                }});

            r.push_back({"C6", "minimum degree is odd and maximum degree is even", "corollary degree parity", 2, fixed(12),
                [] (unsigned, const Config &) { return string("delta odd, Delta even"); },
                [] (unsigned n, const Config & config) {
                    auto s = scan_degrees(graph(n, config));
                    return Observation{string("delta ") + parity(s.min) + ", Delta " + parity(s.max)};
                }});

            r.push_back({"C7", "primitive degree of the full-set vertex is |E| - Delta", "apex primitive-degree proposition", 2, fixed(9),
                [] (unsigned n, const Config &) { return str(apex_primitive_degree(GroundSize{n})); },
                [] (unsigned n, const Config & config) {
                    auto g = graph(n, config);
                    auto apex = g.index_of(g.spec().full_mask());
                    return Observation{str(oracle::count_triangles_through(oracle::SmallGraph{g}, apex))};
                }});

            r.push_back({"C8", "|E(n+1)| = 3|E(n)| + |V(n)| + |E(K_(|V(n)|+1))|", "edge recursion theorem, part (i)", 2, fixed(10),
                [] (unsigned n, const Config &) { return str(edge_count_recursive(GroundSize{n})); },
                [] (unsigned n, const Config &) { return Observation{str(edge_count_brute(GroundSize{n}))}; },
                [] (const Config & c) { return std::min(c.count_cap, 19u); },
                [] (unsigned n, const Config &) { return Observation{str(edge_count_closed(GroundSize{n}))}; },
                "closed form C(2^n-1, 2) - (3^n - 2^(n+1) + 1)/2"});

            r.push_back({"C9", "|V(n+1)| = 2|V(n)| + 1", "edge recursion theorem, part (ii)", 1, fixed(16),
                [] (unsigned n, const Config &) {
                    uint64_t v = 1;
                    for (unsigned k = 1; k < n; ++k)
                        v = 2 * v + 1;
                    return str(v);
                },
                [] (unsigned n, const Config &) {
                    uint64_t count = 0;
                    for (uint64_t m = 1; m < (uint64_t{1} << n); ++m)
                        ++count;
                    return Observation{str(count)};
                },
                [] (const Config & c) { return c.count_cap; },
                [] (unsigned n, const Config &) { return Observation{str(pow2(n) - 1)}; },
                "closed form 2^n - 1"});

            r.push_back({"C10", "G(n) has exactly two largest complete subgraphs, each K_(2^(n-1))", "largest-complete-graphs proposition", 2,
                [] (const Config & c) { return c.oracle.cliques; },
                [] (unsigned n, const Config &) {
                    return "2 maximum cliques of size " + str(clique_number(GroundSize{n}));
                },
                [] (unsigned n, const Config & config) {
                    auto c = max_cliques(graph(n, config));
                    return Observation{str(c.cliques.size()) + " maximum cliques of size " + str(c.clique_size), render_cliques(c)};
                }});

            Claim holes{"C11", "h(n+1) = h(n) + C(2^n, 3) + 4|E(n)|", "primitive-hole recursion theorem", 2, fixed(9),
                [] (unsigned n, const Config &) { return str(triangle_count_paper(GroundSize{n})); },
                [] (unsigned n, const Config & config) {
                    return Observation{str(oracle::count_triangles(oracle::SmallGraph{graph(n, config)}))};
                }};
            holes.annotate = [] (ClaimVerdict & v, const Config & config) {
                if (v.status != Status::refuted || v.n_tested.empty())
                    return;
                bool corrected_agrees = true;
                for (auto n : v.n_tested)
                    corrected_agrees = corrected_agrees && str(triangle_count_corrected(GroundSize{n})) == str(oracle::count_triangles(oracle::SmallGraph{graph(n, config)}));
                v.notes.push_back(string("corrected recursion ") + (corrected_agrees ? "agrees" : "disagrees")
                        + " with the oracle on every tested n");
                if (v.n_tested.back() >= 4) {
                    // seeding the literal recursion with the exact h(3) instead of h(2) = 0
                    auto seeded = 13 + binomial(8, 3) + 4 * edge_count_closed(GroundSize{3});
                    v.notes.push_back("seeded with the exact h(3) = 13, the stated recursion gives h(4) = " + str(seeded)
                            + " against the exact 222");
                }
            };
            r.push_back(holes);

            r.push_back({"C12", "tightness recursion: new singleton 2^n - 1, old value k becomes 2k + 1, replica gets 2^n + k",
                "tightness recursion theorem, parts (i)-(iii)", 2, fixed(10),
                [] (unsigned n, const Config &) {
                    auto old = tightness_vector(GroundSize{n - 1});
                    return list(tightness_recursion_step(GroundSize{n - 1}, old.values).values);
                },
                [] (unsigned n, const Config &) { return Observation{list(tightness_vector(GroundSize{n}).values)}; }});

            r.push_back({"C13", "chi(G(n)) = 2^(n-1)", "chromatic number theorem", 1,
                [] (const Config & c) { return c.oracle.chromatic; },
                [] (unsigned n, const Config &) { return str(pow2(n - 1)); },
                [] (unsigned n, const Config & config) { return Observation{str(chromatic_oracle(graph(n, config)))}; },
                [] (const Config &) { return 12u; },
                [] (unsigned n, const Config &) {
                    GroundSize ground{n};
                    auto colouring = chromatic_coloring(ground);
                    auto clique = clique_witness(ground);
                    bool is_clique = true;
                    for (std::size_t a = 0; a < clique.size(); ++a)
                        for (std::size_t b = a + 1; b < clique.size(); ++b)
                            is_clique = is_clique && adjacent(clique[a], clique[b]);
                    if (! is_proper(colouring) || ! is_clique || colouring.colour_count != clique.size())
                        return Observation{"uncertified: " + str(colouring.colour_count) + " colours vs clique " + str(clique.size())};
                    return Observation{str(colouring.colour_count)};
                },
                "certificate: proper complement-pairing colouring matched by a clique of equal size"});

            r.push_back({"C14", "alpha(G(n)) = n", "independence number theorem", 1,
                [] (const Config & c) { return c.oracle.independence; },
                [] (unsigned n, const Config &) { return str(independence_number(GroundSize{n}).value); },
                [] (unsigned n, const Config & config) { return Observation{str(independence_oracle(graph(n, config)))}; }});

            r.push_back({"C15", "gamma(G(n)) = 1", "domination number theorem", 1,
                [] (const Config & c) { return c.oracle.domination; },
                [] (unsigned n, const Config &) { return str(domination(GroundSize{n}).value); },
                [] (unsigned n, const Config & config) {
                    auto d = domination_oracle(graph(n, config));
                    return Observation{str(d.value), join(d.witness, subset_string, ";")};
                },
                [] (const Config &) { return 12u; },
                [] (unsigned n, const Config &) { return Observation{full_set_is_universal(GroundSize{n}) ? "1" : "more than 1"}; },
                "universal-vertex check on the full set"});

            r.push_back({"C16", "b(G(n)) = 1", "bondage number theorem", 2,
                [] (const Config & c) { return c.oracle.bondage; },
                [] (unsigned n, const Config &) { return str(bondage_number(GroundSize{n}).value); },
                [] (unsigned n, const Config & config) {
                    auto b = bondage_oracle(graph(n, config));
                    if (! b)
                        return Observation{"more than 1"};
                    return Observation{str(b->value), subset_string(b->edge.first) + " - " + subset_string(b->edge.second)};
                }});

            r.push_back({"C17", "McPherson number of G(n) is 2^(n-1) - 1", "McPherson number theorem", 1,
                [] (const Config & c) { return c.oracle.vertex_cover; },
                [] (unsigned n, const Config &) { return str(mcpherson_number(GroundSize{n})); },
                [] (unsigned n, const Config & config) {
                    auto g = graph(n, config);
                    auto cover = mcpherson_oracle(g);
                    // explode every subset avoiding a_1
                    vector<SubsetMask> order;
                    for (auto m : g.masks())
                        if (! (m.bits & 1u))
                            order.push_back(m);
                    auto outcome = simulate_explosions(g, order);
                    string value = str(cover);
                    if (! outcome.complete || outcome.iterations != order.size())
                        value += " (exploding the " + str(order.size()) + " subsets avoiding a1 does not complete exactly at the end)";
                    return Observation{value};
                }});

            r.push_back({"C18", "|E| = (1/2) sum of tightness numbers", "handshake remark on tightness", 1, fixed(10),
                [] (unsigned n, const Config &) { return str(edge_count_closed(GroundSize{n})); },
                [] (unsigned n, const Config &) {
                    uint64_t sum = 0;
                    for (auto t : tightness_vector(GroundSize{n}).values)
                        sum += t;
                    return Observation{sum % 2 ? "odd tightness sum " + str(sum) : str(sum / 2)};
                },
                [] (const Config & c) { return std::min(c.count_cap, 19u); },
                [] (unsigned n, const Config &) { return Observation{str(degree_sum_closed(GroundSize{n}) / 2)}; },
                "half the closed-form degree sum over cardinality classes"});

            r.push_back({"C19", "h(K_m) = C(m, 3); level n covers 2^(n-1) < m <= 2^n", "complete-graph hole count", 1, fixed(6),
                [] (unsigned n, const Config &) {
                    vector<uint64_t> v;
                    for (uint64_t m = n == 1 ? 1 : pow2(n - 1) + 1; m <= pow2(n); ++m)
                        v.push_back(h_complete(m));
                    return list(v);
                },
                [] (unsigned n, const Config &) {
                    vector<uint64_t> v;
                    for (uint64_t m = n == 1 ? 1 : pow2(n - 1) + 1; m <= pow2(n); ++m)
                        v.push_back(oracle::count_triangles(oracle::SmallGraph::complete(m)));
                    return Observation{list(v)};
                }});

            r.push_back({"C20", "0 <= h(G(n)) <= C(2^n - 1, 3) and h(G(n-1)) <= h(G(n)) for the induced subgraph", "hole bound and subgraph monotonicity", 2,
                [] (const Config & c) { return std::min({12u, c.triangle_cap, c.materialize_cap}); },
                [] (unsigned, const Config &) { return string("holds"); },
                [] (unsigned n, const Config & config) {
                    auto h = triangle_count_exact(graph(n, config), config.threads);
                    auto h_sub = triangle_count_exact(graph(n - 1, config), config.threads);
                    auto bound = binomial(vertex_count(GroundSize{n}), 3);
                    if (h > bound)
                        return Observation{"fails: h=" + str(h) + " > " + str(bound)};
                    if (h_sub > h)
                        return Observation{"fails: h(n-1)=" + str(h_sub) + " > h(n)=" + str(h)};
                    return Observation{"holds"};
                }});

            Claim closure{"C21", "m_i + m_j, m_i m_j and m_i - m_j (m_i > m_j) are not Mela numbers", "Mela numbers, problem 1", 1,
                [] (const Config & c) { return c.mela_max_index; }, {}, {}};
            closure.custom = closure_claim;
            r.push_back(closure);

            Claim divisibility{"C22", "m_i divides m_(ki) and m_(ki) / m_i is not a Mela number", "Mela numbers, problem 2", 1,
                [] (const Config & c) { return c.mela_max_index; }, {}, {}};
            divisibility.custom = divisibility_claim;
            r.push_back(divisibility);

            return r;
        }

        auto observe(const Claim & claim, unsigned n, const Config & config) -> Observation
        {
            if (n <= claim.oracle_cap(config) || ! claim.closed)
                return claim.oracle(n, config);
            return claim.closed(n, config);
        }
    }

    auto status_name(Status s) -> const char *
    {
        switch (s) {
            case Status::confirmed: return "CONFIRMED";
            case Status::refuted: return "REFUTED";
            case Status::skipped: return "SKIPPED";
        }
        return "?";
    }

    auto registry() -> const vector<Claim> &
    {
        static const vector<Claim> claims = build_registry();
        return claims;
    }

    auto find_claim(const string & id) -> const Claim &
    {
        for (const auto & c : registry())
            if (c.id == id)
                return c;
        throw InvalidArgument("unknown claim id '" + id + "'");
    }

    auto parse_selection(const string & text) -> vector<string>
    {
        vector<string> ids;
        if (text == "all") {
            for (const auto & c : registry())
                ids.push_back(c.id);
            return ids;
        }
        std::istringstream in{text};
        for (string id; std::getline(in, id, ','); ) {
            id.erase(0, id.find_first_not_of(" \t"));
            id.erase(id.find_last_not_of(" \t") + 1);
            if (id.empty())
                continue;
            find_claim(id);
            if (std::find(ids.begin(), ids.end(), id) == ids.end())
                ids.push_back(id);
        }
        if (ids.empty())
            throw InvalidArgument("empty claim selection");
        return ids;
    }

    auto run_claim(const Claim & claim, const Config & config) -> ClaimVerdict
    {
        if (claim.custom)
            return claim.custom(claim, config);

        ClaimVerdict v{claim.id, claim.description, claim.anchor, {}, Status::confirmed, std::nullopt, {}};
        const auto oracle_top = std::min(config.max_n, claim.oracle_cap(config));
        const auto closed_top = claim.closed ? std::min(config.max_n, claim.closed_cap(config)) : oracle_top;
        const auto top = std::max(oracle_top, closed_top);

        if (top < claim.min_n) {
            v.status = Status::skipped;
            v.notes.push_back("requested max_n=" + str(config.max_n) + " is below the smallest meaningful n=" + str(claim.min_n));
            return v;
        }

        vector<unsigned> failing;
        for (unsigned n = claim.min_n; n <= top; ++n) {
            auto expected = claim.formula(n, config);
            auto seen = observe(claim, n, config);
            v.n_tested.push_back(n);
            if (expected == seen.value)
                continue;
            failing.push_back(n);
            if (! v.counterexample) {
                auto witness = seen.witness;
                if (witness.empty() && expected.starts_with('[') && seen.value.starts_with('['))
                    witness = first_difference(expected, seen.value);
                v.counterexample = Counterexample{n, expected, seen.value, witness};
            }
        }

        if (claim.closed && closed_top > oracle_top)
            v.notes.push_back("n=" + str(oracle_top + 1) + ".." + str(closed_top) + " checked by " + claim.closed_name);
        if (config.max_n > top)
            v.notes.push_back("clamped to n<=" + str(top) + " (oracle range)");
        if (! failing.empty()) {
            v.status = Status::refuted;
            v.notes.push_back("fails at n=" + join(failing, [] (unsigned n) { return str(n); }));
        }
        if (claim.annotate)
            claim.annotate(v, config);
        return v;
    }

    auto run_claims(std::span<const string> selection, const Config & config) -> vector<ClaimVerdict>
    {
        if (selection.empty())
            throw InvalidArgument("empty claim selection");
        config.validate();

        vector<const Claim *> chosen;
        for (const auto & c : registry())
            if (std::find(selection.begin(), selection.end(), c.id) != selection.end())
                chosen.push_back(&c);
        for (const auto & id : selection)
            find_claim(id);

        vector<ClaimVerdict> verdicts(chosen.size());
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_lock;
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < chosen.size(); ) {
                try {
                    verdicts[i] = run_claim(*chosen[i], config);
                }
                catch (...) {
                    std::lock_guard lock{failure_lock};
                    if (! failure)
                        failure = std::current_exception();
                }
            }
        };

        if (config.threads <= 1)
            worker();
        else {
            vector<std::jthread> pool;
            for (unsigned t = 0; t < std::min<std::size_t>(config.threads, chosen.size()); ++t)
                pool.emplace_back(worker);
        }
        if (failure)
            std::rethrow_exception(failure);
        return verdicts;
    }

    auto reverify(const ClaimVerdict & verdict, const Config & config) -> bool
    {
        if (verdict.status != Status::refuted || ! verdict.counterexample)
            return false;
        const auto & claim = find_claim(verdict.id);
        if (claim.custom) {
            auto again = claim.custom(claim, config);
            return again.counterexample && again.counterexample->actual == verdict.counterexample->actual;
        }
        return observe(claim, verdict.counterexample->n, config).value == verdict.counterexample->actual;
    }

    auto parse_format(const string & text) -> Format
    {
        if (text == "json")
            return Format::json;
        if (text == "md" || text == "markdown")
            return Format::markdown;
        throw InvalidArgument("unknown report format '" + text + "' (expected json or md)");
    }

    namespace
    {
        auto tested_range(const vector<unsigned> & ns) -> string
        {
            if (ns.empty())
                return "-";
            return ns.front() == ns.back() ? str(ns.front()) : str(ns.front()) + ".." + str(ns.back());
        }

        auto utc_now() -> string
        {
            auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
            std::tm tm{};
            gmtime_r(&t, &tm);
            std::ostringstream out;
            out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
            return out.str();
        }

        auto md_cell(string s) -> string
        {
            for (std::size_t p = 0; (p = s.find('|', p)) != string::npos; p += 2)
                s.replace(p, 1, "\\|");
            return s;
        }
    }

    auto render_report(std::span<const ClaimVerdict> verdicts, Format format, const Config & config) -> string
    {
        if (verdicts.empty())
            throw InvalidArgument("no verdicts to render");

        if (format == Format::markdown) {
            std::ostringstream out;
            out << "# Claim verification\n\n"
                << "max_n " << config.max_n << ", Mela indices up to " << config.mela_max_index
                << ", vertex order " << config.order_version << "\n\n"
                << "| id | status | n tested | claim | counterexample | notes |\n"
                << "|---|---|---|---|---|---|\n";
            for (const auto & v : verdicts) {
                string cx = "-";
                if (v.counterexample)
                    cx = "n=" + str(v.counterexample->n) + ": " + v.counterexample->actual + ", expected " + v.counterexample->expected;
                out << "| " << v.id << " | " << status_name(v.status) << " | " << tested_range(v.n_tested) << " | "
                    << md_cell(v.description) << " | " << md_cell(cx) << " | "
                    << md_cell(join(v.notes, [] (const string & s) { return s; }, "; ")) << " |\n";
            }
            return out.str();
        }

        using json = nlohmann::ordered_json;
        json claims = json::array();
        for (const auto & v : verdicts) {
            json c;
            c["id"] = v.id;
            c["description"] = v.description;
            c["anchor"] = v.anchor;
            c["n_tested"] = v.n_tested;
            c["status"] = status_name(v.status);
            if (v.counterexample)
                c["counterexample"] = {
                    {"n", v.counterexample->n},
                    {"expected", v.counterexample->expected},
                    {"actual", v.counterexample->actual},
                    {"witness", v.counterexample->witness}};
            c["notes"] = v.notes;
            claims.push_back(std::move(c));
        }

        json report;
        report["claims"] = std::move(claims);
        report["generated_at"] = config.timestamp ? json(utc_now()) : json(nullptr);
        report["config"] = {
            {"max_n", config.max_n},
            {"materialize_cap", config.materialize_cap},
            {"triangle_cap", config.triangle_cap},
            {"oracle_caps", {
                {"cliques", config.oracle.cliques},
                {"chromatic", config.oracle.chromatic},
                {"independence", config.oracle.independence},
                {"domination", config.oracle.domination},
                {"bondage", config.oracle.bondage},
                {"vertex_cover", config.oracle.vertex_cover}}},
            {"mela_max_index", config.mela_max_index},
            {"order_version", config.order_version}};
        return report.dump(2) + "\n";
    }
}

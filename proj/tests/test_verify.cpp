#include <doctest.h>

#include <setgraph/error.hpp>
#include <setgraph/verify.hpp>

#include <fstream>
#include <sstream>

using namespace setgraph;
using namespace setgraph::verify;

namespace
{
    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    auto run_all(const Config & c) -> std::vector<ClaimVerdict>
    {
        auto selection = parse_selection("all");
        return run_claims(selection, c);
    }
}

TEST_CASE("registry covers C1 to C22")
{
    const auto & r = registry();
    REQUIRE(r.size() == 22);
    for (std::size_t i = 0; i < r.size(); ++i)
        CHECK(r[i].id == "C" + std::to_string(i + 1));
    CHECK(find_claim("C11").id == "C11");
    CHECK_THROWS_AS(find_claim("C23"), InvalidArgument);
}

TEST_CASE("selection parsing")
{
    CHECK(parse_selection("all").size() == 22);
    CHECK(parse_selection("C8,C11") == std::vector<std::string>{"C8", "C11"});
    CHECK_THROWS_AS(parse_selection(""), InvalidArgument);
    CHECK_THROWS_AS(parse_selection("C8,X"), InvalidArgument);
    CHECK(parse_format("md") == Format::markdown);
    CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
}

TEST_CASE("verdicts")
{
    Config c;
    auto verdicts = run_all(c);
    REQUIRE(verdicts.size() == 22);
    for (const auto & v : verdicts) {
        CAPTURE(v.id);
        CHECK_FALSE(v.n_tested.empty());
        if (v.id == "C10" || v.id == "C11") {
            CHECK(v.status == Status::refuted);
            REQUIRE(v.counterexample.has_value());
            CHECK(v.counterexample->n == 3);
            CHECK(reverify(v, c));
        }
        else {
            CHECK(v.status == Status::confirmed);
            CHECK_FALSE(v.counterexample.has_value());
        }
    }
    auto c11 = verdicts[10];
    CHECK(c11.counterexample->expected == "12");
    CHECK(c11.counterexample->actual == "13");
}

TEST_CASE("everything holds at n=2")
{
    Config c;
    c.max_n = 2;
    for (const auto & v : run_all(c)) {
        CAPTURE(v.id);
        if (v.id != "C21" && v.id != "C22")
            CHECK(v.n_tested.back() <= 2);
        CHECK(v.status == Status::confirmed);
    }
}

TEST_CASE("empty range is skipped")
{
    Config c;
    c.max_n = 1;
    auto selection = parse_selection("C8");
    auto v = run_claims(selection, c);
    CHECK(v[0].status == Status::skipped);
    CHECK(v[0].n_tested.empty());
}

TEST_CASE("reports are deterministic and threads do not change them")
{
    Config c;
    auto a = render_report(run_all(c), Format::json, c);
    auto b = render_report(run_all(c), Format::json, c);
    CHECK(a == b);
    Config t = c;
    t.threads = 3;
    auto threaded = run_all(t);
    auto serial = run_all(c);
    CHECK(render_report(threaded, Format::markdown, c) == render_report(serial, Format::markdown, c));
    CHECK(a.find("\"generated_at\": null") != std::string::npos);
}

TEST_CASE("frozen verdict fixture")
{
    Config c;
    CHECK(render_report(run_all(c), Format::json, c) == read_file(SETGRAPH_FIXTURE_DIR "/verify_all.json"));
}

TEST_CASE("config validation")
{
    Config c;
    c.max_n = 21;
    CHECK_THROWS_AS(c.validate(), RangeError);
    c = {};
    c.threads = 0;
    CHECK_THROWS(c.validate());
    c = {};
    c.oracle.chromatic = 5;
    CHECK_THROWS(c.validate());
}

#include <doctest.h>

#include <setgraph/error.hpp>
#include <setgraph/mela.hpp>

using namespace setgraph;

TEST_CASE("mela sequence")
{
    auto m = mela(20);
    CHECK(m.at(1) == 1);
    CHECK(m.at(2) == 3);
    CHECK(m.at(3) == 7);
    CHECK(m.at(4) == 15);
    for (unsigned i = 2; i <= 20; ++i)
        CHECK(m.at(i) == 2 * m.at(i - 1) + 1);
    CHECK(mela(62).at(62) == (std::uint64_t{1} << 62) - 1);
    CHECK_THROWS_AS(mela(0), RangeError);
    CHECK_THROWS_AS(mela(63), RangeError);
}

TEST_CASE("is_mela")
{
    CHECK_FALSE(is_mela(0));
    CHECK(is_mela(1));
    CHECK(is_mela(31));
    CHECK_FALSE(is_mela(30));
    CHECK(is_mela((std::uint64_t{1} << 62) - 1));
}

TEST_CASE("closure")
{
    auto c = check_closure(20);
    CHECK_FALSE(c.failure.has_value());
    REQUIRE(c.degenerate_failure.has_value());
    CHECK(c.degenerate_failure->i == 1);
    CHECK(c.degenerate_failure->relation == "product");
    CHECK(c.cases == 400);
}

TEST_CASE("divisibility")
{
    auto c = check_divisibility(20, 20);
    CHECK_FALSE(c.failure.has_value());
    CHECK(c.degenerate_failure.has_value());
    CHECK_FALSE(c.notes.empty());
    CHECK_FALSE(describe(*c.degenerate_failure).empty());
}

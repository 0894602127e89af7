#include "doctest.h"

#include "enkit/decision.hpp"
#include "enkit/error.hpp"

using namespace enkit;

TEST_CASE("decide finds a root") {
    DecideOptions o;
    o.cap = 100;
    auto v = decide(parse_equation("x1 - 2 = 0"), o);
    CHECK(v.outcome == Outcome::Yes);
    REQUIRE(v.root);
    CHECK(*v.root == std::vector<BigInt>{2});
    CHECK(v.conjecture_conditional);
    CHECK(v.finite_solution_set_conditional);
    CHECK(v.cap_limited);
    CHECK(v.w == std::max<std::size_t>(v.n, 9));
}

TEST_CASE("decide returns the lexicographically first root") {
    DecideOptions o;
    o.cap = 10;
    auto v = decide(parse_equation("x1*x2 - 6 = 0"), o);
    CHECK(v.outcome == Outcome::Yes);
    CHECK(*v.root == std::vector<BigInt>{1, 6});
}

TEST_CASE("decide says NO only with an exhausted override box") {
    DecideOptions o;
    o.assume_bound = BigInt(100);
    auto v = decide(parse_equation("x1*x1 - 2 = 0"), o);
    CHECK(v.outcome == Outcome::No);
    CHECK(v.override_bound);
    CHECK_FALSE(v.cap_limited);
    CHECK(v.searched_bound == 100);

    // Same box reached through the cap alone is not a NO.
    DecideOptions c;
    c.cap = 100;
    auto capped = decide(parse_equation("x1*x1 - 2 = 0"), c);
    CHECK(capped.outcome == Outcome::Inconclusive);
    CHECK(capped.cap_limited);
}

TEST_CASE("budget exhaustion is inconclusive") {
    DecideOptions o;
    o.assume_bound = BigInt(100);
    o.node_budget = 10;
    // Two unknowns keep the search from closing in a handful of nodes.
    auto v = decide(parse_equation("x1*x2 - 2*x2 - 3*x1 + 7 = 0"), o);
    CHECK(v.outcome != Outcome::No);
    if (v.outcome == Outcome::Inconclusive) CHECK(v.search_status == SolveStatus::BudgetExceeded);

    auto w = decide(parse_equation("x1^2 - 2*x2^2 = 0"), o);
    CHECK(w.outcome != Outcome::No);
}

TEST_CASE("decide validates delta") {
    DecideOptions o;
    o.delta = 8;
    CHECK_THROWS_AS(decide(parse_equation("x1 - 2"), o), Error);
    o.assume_bound = BigInt(10);
    CHECK_NOTHROW(decide(parse_equation("x1 - 2"), o));
}

TEST_CASE("bound is symbolic for large w") {
    DecideOptions o;
    o.delta = 40;
    auto v = decide(parse_equation("x1 - 2"), o);
    CHECK(v.w == 40);
    CHECK_FALSE(v.bound.materialized());
    CHECK(v.outcome == Outcome::Yes);
}

TEST_CASE("larger caps keep a YES") {
    auto d = parse_equation("x1*x2 - 6 = 0");
    for (long cap : {3L, 6L, 10L, 40L}) {
        DecideOptions o;
        o.cap = cap;
        auto v = decide(d, o);
        CHECK(v.outcome == Outcome::Yes);
        CHECK(d.evaluate(*v.root) == 0);
    }
}

#include "doctest.h"

#include "enkit/error.hpp"
#include "enkit/polynomial.hpp"
#include "enkit/system.hpp"
#include "enkit/univariate.hpp"
#include "enkit/witnesses.hpp"

#include <random>

using namespace enkit;

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) {
    std::vector<BigInt> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

// Index triples with i <= j, counted directly.
std::size_t count_universe(std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k) ++c;
    return c + n * n;
}

System random_system(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    std::uniform_int_distribution<VarIndex> idx(1, static_cast<VarIndex>(n));
    std::vector<Equation> eqs;
    for (std::size_t e = 0; e < m; ++e) {
        if (rng() % 3 == 0)
            eqs.push_back(Equation::succ(idx(rng), idx(rng)));
        else
            eqs.push_back(Equation::mul(idx(rng), idx(rng), idx(rng)));
    }
    return System(n, eqs);
}

}  // namespace

TEST_CASE("canonicalize orders Mul indices and drops duplicates") {
    auto a = canonicalize(System(2, {Equation::mul(2, 1, 2)}));
    CHECK(a == System(2, {Equation::mul(1, 2, 2)}));
    auto b = canonicalize(System(1, {Equation::mul(1, 1, 1), Equation::mul(1, 1, 1)}));
    CHECK(b == System(1, {Equation::mul(1, 1, 1)}));
    auto chain = chain_system(3);
    CHECK(canonicalize(chain).equations().size() == chain.size());
}

TEST_CASE("canonicalize is idempotent and keeps solutions") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        auto s = random_system(rng, 3, rng() % 6);
        auto c = canonicalize(s);
        CHECK(canonicalize(c) == c);
        for (int p = 0; p < 20; ++p) {
            std::vector<BigInt> x;
            for (int i = 0; i < 3; ++i) x.emplace_back(static_cast<long>(rng() % 4 + 1));
            CHECK(is_solution(s, x) == is_solution(c, x));
        }
    }
}

TEST_CASE("system constructor rejects out-of-range indices") {
    CHECK_THROWS_AS(System(2, {Equation::mul(1, 3, 2)}), Error);
    CHECK_THROWS_AS(System(2, {Equation::succ(0, 1)}), Error);
    CHECK_THROWS_AS(System(0, {}), Error);
}

TEST_CASE("universe sizes match direct enumeration") {
    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(universe_size(n) == count_universe(n));
        CHECK(universe(n).size() == count_universe(n));
        CHECK(universe_size(n) == n * n * (n + 1) / 2 + n * n);
    }
    CHECK(universe(1).size() == 2);
    CHECK(universe(2).size() == 10);
    CHECK(universe(3).size() == 27);
}

TEST_CASE("universe contains every canonical equation at its index") {
    const std::size_t n = 3;
    auto u = universe(n);
    CHECK(canonicalize(u) == u);
    for (std::size_t b = 0; b < u.size(); ++b) CHECK(universe_index(u.equations()[b], n) == b);
    for (VarIndex i = 1; i <= n; ++i)
        for (VarIndex j = 1; j <= n; ++j)
            for (VarIndex k = 1; k <= n; ++k) {
                auto e = Equation::mul(i, j, k).canonical();
                CHECK(u.equations()[universe_index(e, n)] == e);
            }
}

TEST_CASE("evaluate and is_solution") {
    CHECK(evaluate(Equation::mul(1, 1, 2), big({3, 9})));
    CHECK_FALSE(evaluate(Equation::succ(1, 2), big({1, 3})));
    CHECK(evaluate(Equation::succ(1, 2), big({1, 2})));
    auto chain = chain_system(4);
    CHECK(is_solution(chain, big({1, 2, 4, 16})));
    CHECK_FALSE(is_solution(chain, big({1, 2, 4, 15})));
    CHECK(is_solution(System(3, {}), big({5, 6, 7})));
}

TEST_CASE("evaluate is exact beyond machine words") {
    BigInt a = pow2(200), b = pow2(400);
    CHECK(evaluate(Equation::mul(1, 1, 2), std::vector<BigInt>{a, b}));
    CHECK_FALSE(evaluate(Equation::mul(1, 1, 2), std::vector<BigInt>{a, b + 1}));
}

TEST_CASE("assignment enforces its minimum value") {
    CHECK_THROWS_AS(Assignment(big({0, 1})), Error);
    CHECK_NOTHROW(Assignment(big({0, 1}), 0));
    CHECK_THROWS_AS(Assignment(big({1}), 2), Error);
    CHECK(Assignment(big({3, 9, 4})).max_norm() == 9);
}

TEST_CASE("extend_with_square") {
    CHECK(extend_with_square(chain_system(3), 3) == chain_system(4));
    auto one = System(1, {Equation::mul(1, 1, 1)});
    auto e1 = extend_with_square(one, 1);
    CHECK(e1 == System(2, {Equation::mul(1, 1, 1), Equation::mul(1, 1, 2)}));
    CHECK_THROWS_AS(extend_with_square(one, 2), Error);
}

TEST_CASE("system text round trip") {
    auto s = fermat_system(2);
    CHECK(parse_system_text(render_system_text(s)) == s);
    auto p = parse_system_text_full("# tn: x1=1 x2=2\nvars 3\nx3 * x3 = x3\n  x3*x1=x2  # comment\n");
    CHECK(p.system == System(3, {Equation::mul(3, 3, 3), Equation::mul(3, 1, 2)}));
    REQUIRE(p.comments.size() >= 1);
    CHECK(p.comments[0].find("tn:") != std::string::npos);
    CHECK(parse_system_text("x1 + 1 = x4\n").n() == 4);
}

TEST_CASE("system text rejects malformed input") {
    CHECK_THROWS_AS(parse_system_text("x1 * x2 = \n"), Error);
    CHECK_THROWS_AS(parse_system_text("x1 + 2 = x2\n"), Error);
    CHECK_THROWS_AS(parse_system_text("vars 2\nx1 * x3 = x2\n"), Error);
    CHECK_THROWS_AS(parse_system_text("x1 + 1 = x2\nvars 3\n"), Error);
    try {
        parse_system_text("x0 + 1 = x1\n");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK((e.code() == ErrorCode::Parse || e.code() == ErrorCode::IndexRange));
    }
}

TEST_CASE("parse_equation normalizes") {
    auto d = parse_equation("x1 - 1 = 0");
    CHECK(d.num_vars() == 1);
    CHECK(d.coefficient({1}) == 1);
    CHECK(d.coefficient({0}) == -1);
    CHECK(d.terms().size() == 2);

    auto e = parse_equation("x1^2*x2 - 3*x1 + 7");
    CHECK(e.num_vars() == 2);
    CHECK(e.coefficient({2, 1}) == 1);
    CHECK(e.coefficient({1, 0}) == -3);
    CHECK(e.coefficient({0, 0}) == 7);
    CHECK(e.terms().size() == 3);

    CHECK(parse_equation("x1*x1 - x1^2").is_zero());
    CHECK(parse_equation("(x1 + 1)^2 = x1^2 + 2*x1 + 1").is_zero());
    CHECK(parse_equation("x2 = x1").num_vars() == 2);
    CHECK(parse_equation("123456789012345678901234567890*x1").coefficient({1}) == BigInt("123456789012345678901234567890"));
}

TEST_CASE("parse_equation errors") {
    for (const char* bad : {"x1 +", "x1^0", "x1^-1", "x0 + 1", "x1 = = 2", "2*", "(x1", "x1 x2", "y1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_equation(bad), Error);
    }
    try {
        parse_equation("x1 + * 2");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Parse);
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("render round trips") {
    for (const char* s : {"x1^2*x2 - 3*x1 + 7", "x1 - 1", "-x1*x2^3 + x3", "0", "5", "2*x1^2 - x2"}) {
        auto d = parse_equation(s);
        CHECK(parse_equation(render(d)) == d);
        CHECK(render(parse_equation(render(d))) == render(d));
    }
    CHECK(render(parse_equation("x1^2*x2 - 3*x1 + 7")) == "x1^2*x2 - 3*x1 + 7");
}

TEST_CASE("assert_degrees") {
    CHECK_NOTHROW(assert_degrees(parse_equation("x1 - 1")));
    try {
        assert_degrees(parse_equation("x1 + 0*x2"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Degree);
        CHECK(std::string(e.what()).find("x2") != std::string::npos);
    }
    CHECK_THROWS_AS(assert_degrees(Polynomial(1)), Error);
}

TEST_CASE("successor_polynomial") {
    auto t = successor_polynomial(parse_equation("x1 - 1"));
    CHECK(t == parse_equation("2*x1 + 2"));
    CHECK(successor_polynomial(parse_equation("-3*x1^2")) == parse_equation("4*x1^2"));
    CHECK(successor_polynomial(Polynomial(1)).is_zero());
    auto d = parse_equation("x1 - 1");
    CHECK(successor_polynomial(successor_polynomial(d)) != successor_polynomial(d));
    auto positive = successor_polynomial(parse_equation("-5*x1*x2 + x2 - 7"));
    for (const auto& [e, c] : positive.terms()) CHECK(c > 0);
}

TEST_CASE("split_sides") {
    auto s = split_sides(parse_equation("x1 - 1"));
    REQUIRE(s.lhs.size() == 1);
    CHECK(s.lhs[0].exponents == Exponents{1});
    CHECK(s.lhs[0].multiplicity == 3);
    CHECK(s.lhs_units == 2);
    REQUIRE(s.rhs.size() == 1);
    CHECK(s.rhs[0].multiplicity == 2);
    CHECK(s.rhs_units == 3);

    auto c = split_sides(Polynomial::constant(-2, 0));
    CHECK(c.lhs.empty());
    CHECK(c.rhs.empty());
    CHECK(c.lhs_units == 2);
    CHECK(c.rhs_units == 4);

    auto z = split_sides(Polynomial(1));
    CHECK(z.lhs_units == 1);
    CHECK(z.rhs_units == 1);
}

TEST_CASE("split_sides preserves roots at random points") {
    std::mt19937_64 rng(11);
    for (const char* text : {"x1 - 1", "x1*x2 - 6", "x1^2 - 2*x2^2 + 3", "-x1^3 + x2*x3 - 4*x3 + 1"}) {
        auto d = parse_equation(text);
        auto s = split_sides(d);
        auto side = [&](const std::vector<MonomialTerm>& ms, const BigInt& units, const std::vector<BigInt>& x) {
            BigInt acc = units;
            for (const auto& m : ms) {
                BigInt v = m.multiplicity;
                for (std::size_t i = 0; i < m.exponents.size(); ++i) v *= pow(x[i], m.exponents[i]);
                acc += v;
            }
            return acc;
        };
        for (int t = 0; t < 200; ++t) {
            std::vector<BigInt> x;
            for (std::size_t i = 0; i < d.num_vars(); ++i) x.emplace_back(static_cast<long>(rng() % 10 + 1));
            CHECK((d.evaluate(x) == 0) == (side(s.lhs, s.lhs_units, x) == side(s.rhs, s.rhs_units, x)));
            // lhs - rhs is exactly d
            CHECK(side(s.lhs, s.lhs_units, x) - side(s.rhs, s.rhs_units, x) == d.evaluate(x));
        }
    }
}

TEST_CASE("integer_roots finds exactly the integer roots") {
    // (x - 3)(x - 10)(x + 4) = x^3 - 9x^2 - 22x + 120
    UPoly p(big({120, -22, -9, 1}));
    CHECK(integer_roots(p, 1, std::nullopt) == big({3, 10}));
    CHECK(integer_roots(p, -10, BigInt(5)) == big({-4, 3}));
    CHECK(integer_roots(UPoly(big({-2, 0, 1})), 1, std::nullopt).empty());
    // Oracle: scan small ranges.
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        std::vector<BigInt> c;
        std::size_t deg = rng() % 4 + 1;
        for (std::size_t i = 0; i <= deg; ++i) c.emplace_back(static_cast<long>(rng() % 21) - 10);
        if (c.back() == 0) c.back() = 1;
        UPoly q(c);
        std::vector<BigInt> expect;
        for (long x = -50; x <= 50; ++x)
            if (q.evaluate(BigInt(x)) == 0) expect.emplace_back(x);
        CHECK(integer_roots(q, -50, BigInt(50)) == expect);
    }
}

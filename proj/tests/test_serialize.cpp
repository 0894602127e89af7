#include "doctest.h"

#include "enkit/error.hpp"
#include "enkit/serialize.hpp"

using namespace enkit;

namespace {

template <class T>
T round_trip(const T& v) {
    Json j = v;
    return Json::parse(j.dump()).get<T>();
}

}  // namespace

TEST_CASE("big integers are decimal strings") {
    BigInt big = parse_decimal("17878103347812890626");
    Json j = big;
    CHECK(j == "17878103347812890626");
    CHECK(j.get<BigInt>() == big);
    CHECK_THROWS(Json(42).get<BigInt>());
}

TEST_CASE("systems and assignments round trip") {
    System s(3, {Equation::mul(1, 2, 3), Equation::succ(3, 1)});
    CHECK(round_trip(s) == s);
    Assignment a({BigInt(0), BigInt(5)}, 0);
    CHECK(round_trip(a) == a);
    Json bad = Json::parse(R"({"kind":"add","i":1,"k":2})");
    CHECK_THROWS_AS(bad.get<Equation>(), Error);
}

TEST_CASE("solver results round trip") {
    auto r = solve_all(System(2, {Equation::mul(1, 1, 2)}), 10);
    CHECK(round_trip(r) == r);
    Json j = r;
    CHECK(j["status"] == "complete");
    CHECK(j["solution_count"] == 3);
}

TEST_CASE("compilation maps and reports round trip") {
    auto d = parse_equation("x1*x2 - 3*x1 + 1");
    for (auto mode : {CompileMode::Literal, CompileMode::Optimized}) {
        auto c = compile(d, mode);
        CHECK(round_trip(c.map) == c.map);
        auto rep = verify_conditions(d, c, BigInt(4));
        CHECK(round_trip(rep) == rep);
    }
}

TEST_CASE("verdicts round trip") {
    DecideOptions o;
    o.cap = 20;
    auto v = decide(parse_equation("x1*x2 - 6 = 0"), o);
    CHECK(round_trip(v) == v);
    Json j = v;
    CHECK(j["outcome"] == "YES");
    CHECK(j["flags"]["cap_limited"] == true);

    o.delta = 40;
    auto sym = decide(parse_equation("x1 - 2"), o);
    CHECK(round_trip(sym) == sym);
    CHECK(Json(sym)["bound"]["value"].is_null());
}

TEST_CASE("witness reports round trip") {
    for (std::size_t n : {1u, 5u}) {
        auto c = fermat_uniqueness_certificate(n);
        CHECK(round_trip(c) == c);
    }
    for (const auto& check : bound_identity_report()) CHECK(round_trip(check) == check);
    auto imp = implications_report(10, {});
    CHECK(round_trip(imp) == imp);
    auto b = conjecture_bound(30);
    CHECK(round_trip(b) == b);
}

TEST_CASE("theta records and ledgers round trip") {
    auto r = classify_subset(System(2, {Equation::mul(1, 1, 1), Equation::succ(1, 2)}), 256);
    r.id = 0x2a;
    CHECK(round_trip(r) == r);
    CHECK(Json(r)["id"] == "2a");

    ThetaOptions o;
    o.n = 2;
    auto l = enumerate_theta(o).ledger;
    CHECK(round_trip(l) == l);

    CHECK(parse_subset_id_hex("ff") == 255);
    for (const char* bad : {"", "FF", "0x1", "12345678901234567"}) CHECK_THROWS_AS(parse_subset_id_hex(bad), Error);
}

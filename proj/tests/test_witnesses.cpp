#include "doctest.h"

#include "oracle.hpp"

#include "enkit/error.hpp"
#include "enkit/solver.hpp"
#include "enkit/witnesses.hpp"

using namespace enkit;

TEST_CASE("chain systems") {
    auto c3 = chain_system(3);
    CHECK(c3.n() == 3);
    CHECK(c3.equations() == std::vector<Equation>{Equation::mul(1, 1, 1), Equation::succ(1, 2), Equation::mul(2, 2, 3)});
    CHECK(chain_max(3) == 4);
    CHECK(chain_max(6) == 65536);
    CHECK(chain_max(8) == pow2(64));
    CHECK_THROWS_AS(chain_system(2), Error);

    // Brute force agrees on the small box for n = 3, 4.
    CHECK(oracle::brute_force(chain_system(3), 1, 4) == std::vector<std::vector<std::int64_t>>{{1, 2, 4}});
    CHECK(oracle::brute_force(chain_system(4), 1, 16) == std::vector<std::vector<std::int64_t>>{{1, 2, 4, 16}});
}

TEST_CASE("chain max-norms square from one n to the next") {
    for (std::size_t n = 3; n <= 7; ++n) {
        auto a = certify_unique_pinned(chain_system(n));
        auto b = certify_unique_pinned(chain_system(n + 1));
        REQUIRE(a);
        REQUIRE(b);
        CHECK(b->max_norm() == a->max_norm() * a->max_norm());
    }
}

TEST_CASE("Fermat system shape") {
    CHECK(fermat_system(1).n() == 6);
    CHECK(fermat_system(1).size() == 5);
    CHECK(fermat_system(2).n() == 7);
    CHECK(fermat_system(2).size() == 6);
    CHECK(fermat_system(4).n() == 9);
    CHECK(fermat_system(4).size() == 8);
}

TEST_CASE("Fermat closed solutions") {
    auto a1 = fermat_closed_solution(1);
    CHECK(a1.values() == std::vector<BigInt>{3, 9, 4, 5, 10, 2});
    const char* maxes[] = {"10", "50626", "17878103347812890626"};
    for (std::size_t n = 1; n <= 4; ++n) {
        auto a = fermat_closed_solution(n);
        CHECK(is_solution(fermat_system(n), a));
        BigInt expect = n <= 3 ? BigInt(maxes[n - 1]) : pow(BigInt(65535), 16) + 1;
        CHECK(a.max_norm() == expect);
        CHECK(a.at(static_cast<VarIndex>(n + 4)) == a.max_norm());
        CHECK(a.at(static_cast<VarIndex>(n + 5)) * a.at(static_cast<VarIndex>(n + 3)) == a.at(static_cast<VarIndex>(n + 4)));
        if (n <= 3) CHECK(fermat_alternating_sum(n) == a.at(static_cast<VarIndex>(n + 5)));
    }
    CHECK_THROWS_AS(fermat_closed_solution(20), Error);
    CHECK_NOTHROW(fermat_closed_solution(10));
}

TEST_CASE("Fermat n=2 has one non-negative solution") {
    SolveOptions o;
    o.min_value = 0;
    auto r = solve_all(fermat_system(2), 50626, o);
    CHECK(r.status == SolveStatus::Complete);
    REQUIRE(r.solutions.size() == 1);
    CHECK(r.solutions[0].values() == fermat_closed_solution(2).values());
}

TEST_CASE("Fermat uniqueness certificates") {
    auto c1 = fermat_uniqueness_certificate(1);
    CHECK(c1.status == FermatCertificate::Status::Unique);
    CHECK(c1.divisors == std::vector<BigInt>{5});
    REQUIRE(c1.solutions.size() == 1);
    CHECK(c1.solutions[0].values() == std::vector<BigInt>{3, 9, 4, 5, 10, 2});

    for (std::size_t n = 2; n <= 4; ++n) CHECK(fermat_uniqueness_certificate(n).status == FermatCertificate::Status::Unique);

    auto c5 = fermat_uniqueness_certificate(5);
    CHECK(c5.status == FermatCertificate::Status::NotUnique);
    CHECK(c5.prime_factors == std::vector<BigInt>{641, 6700417});
    CHECK(c5.divisors == std::vector<BigInt>{641, 6700417, BigInt("4294967297")});
    CHECK(c5.solutions.size() == 3);
    for (const auto& s : c5.solutions) {
        CHECK(is_solution(fermat_system(5), s));
        CHECK(s.min_value() == 0);
    }
    CHECK(c5.solutions[0].at(1) == 639);

    auto c6 = fermat_uniqueness_certificate(6);
    CHECK(c6.status == FermatCertificate::Status::NotUnique);
    CHECK(c6.prime_factors == std::vector<BigInt>{274177, BigInt("67280421310721")});
}

TEST_CASE("Fermat 641 is found by trial division alone") {
    auto c = fermat_uniqueness_certificate(5, 10'000);
    CHECK(c.status == FermatCertificate::Status::NotUnique);
    CHECK(c.prime_factors == std::vector<BigInt>{641, 6700417});
    CHECK(c.method.find("known") == std::string::npos);

    // F_7's factors are far beyond a 10^4 budget and not tabulated.
    auto c7 = fermat_uniqueness_certificate(7, 10'000);
    CHECK(c7.status == FermatCertificate::Status::Unknown);
    CHECK(c7.prime_factors.empty());
}

TEST_CASE("divisor solutions satisfy the system") {
    for (const char* d : {"641", "6700417", "4294967297"}) {
        auto a = fermat_divisor_solution(5, BigInt(d));
        CHECK(is_solution(fermat_system(5), a));
        CHECK(a.at(1) == BigInt(d) - 2);
    }
    CHECK_THROWS_AS(fermat_divisor_solution(5, BigInt(7)), Error);
}

TEST_CASE("T_n layout") {
    auto phi = identity_phi();
    for (std::size_t n : {9u, 10u, 11u, 12u}) {
        auto t = tn_system(phi, 1, 2, n);
        CHECK(t.system.n() == n);
        CHECK(t.t.size() == n / 2);
        CHECK(t.padding.size() == n - n / 2 - 3 - 2);
        CHECK(3 + t.padding.size() + t.t.size() + 2 == n);
    }
    auto t9 = tn_system(phi, 1, 2, 9);
    CHECK(t9.padding.empty());
    CHECK_THROWS_AS(tn_system(phi, 1, 2, 8), Error);
    CHECK_THROWS_AS(tn_system(phi, 1, 1, 9), Error);
    CHECK_THROWS_AS(tn_system(phi, 1, 4, 9), Error);
    CHECK_THROWS_AS(tn_system(System(2, {}), 1, 2, 9), Error);
}

TEST_CASE("T_n forces x1 = n") {
    auto phi = identity_phi();
    for (std::size_t n : {9u, 10u}) {
        auto t = tn_system(phi, 1, 2, n);
        auto r = solve_all(t.system, 64);
        CHECK(r.status == SolveStatus::Complete);
        REQUIRE_FALSE(r.solutions.empty());
        for (const auto& s : r.solutions) {
            CHECK(s.at(t.x1) == n);
            CHECK(s.at(t.y) == s.at(t.x2) + 1);
        }
    }
    auto t9 = tn_system(phi, 1, 2, 9);
    auto a = certify_unique_pinned(t9.system);
    REQUIRE(a);
    CHECK(a->at(t9.u) == 8);
    CHECK(a->at(t9.y) == 10);
}

TEST_CASE("conjecture bound") {
    CHECK(conjecture_bound(6).value == BigInt(10));
    CHECK(conjecture_bound(7).value == BigInt(50626));
    CHECK(conjecture_bound(8).value == BigInt("17878103347812890626"));
    auto b9 = conjecture_bound(9);
    REQUIRE(b9.value);
    CHECK(*b9.value == pow(BigInt(65535), 16) + 1);
    CHECK(*b9.value > pow2(240));
    auto b40 = conjecture_bound(40);
    CHECK_FALSE(b40.materialized());
    CHECK(b40.bits_estimate == pow(BigInt(4), 35));
    CHECK(b40.symbolic() == "(2^(2^35)-1)^(2^35)+1");
    CHECK_THROWS_AS(conjecture_bound(5), Error);
    CHECK_FALSE(conjecture_bound(9, 100).materialized());
}

TEST_CASE("identity report passes and detects tampering") {
    for (const auto& c : bound_identity_report()) {
        CAPTURE(c.name);
        CHECK(c.passed);
    }
    BoundConstants bad;
    bad.b7 = 50627;
    std::vector<std::string> failed;
    for (const auto& c : bound_identity_report(bad))
        if (!c.passed) failed.push_back(c.name);
    CHECK(failed == std::vector<std::string>{"B(7) = 50626"});
}

TEST_CASE("implications") {
    auto yes = implications_report(10, {ThetaEvidence::Kind::HypotheticalBelowBound, 0});
    CHECK(yes.implied);
    CHECK(yes.statement.find("2^(2^5)+1") != std::string::npos);
    auto no = implications_report(10, {});
    CHECK_FALSE(no.implied);
    CHECK_THROWS_AS(implications_report(9, {}), Error);
    auto measured = implications_report(10, {ThetaEvidence::Kind::MeasuredUpper, pow2(100)});
    CHECK(measured.implied);
    auto too_big = implications_report(10, {ThetaEvidence::Kind::MeasuredUpper, pow2(2000)});
    CHECK_FALSE(too_big.implied);
}

TEST_CASE("primality helper") {
    CHECK(is_prime_u64(65537));
    CHECK_FALSE(is_prime_u64(BigInt("4294967297")));
    CHECK(is_prime_u64(BigInt("67280421310721")));
    CHECK_THROWS_AS(is_prime_u64(pow2(64) + 1), Error);
}

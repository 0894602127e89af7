#include "doctest.h"

#include "enkit/error.hpp"
#include "enkit/theta.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace enkit;

namespace {

SubsetId mask_of(std::size_t n, std::vector<Equation> eqs) { return subset_mask(System(n, std::move(eqs))); }

std::string temp_path(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / ("enkit_test_" + name);
    std::filesystem::remove(p);
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("classify_subset examples") {
    auto pinned = classify_subset(System(1, {Equation::mul(1, 1, 1)}), 256);
    CHECK(pinned.status == SubsetStatus::PinnedFinite);
    CHECK(pinned.maxnorm == BigInt(1));
    REQUIRE(pinned.witness);
    CHECK(pinned.witness->values() == std::vector<BigInt>{1});

    auto empty = classify_subset(System(2, {}), 256);
    CHECK(empty.status == SubsetStatus::Solved);
    CHECK(empty.maxnorm == BigInt(1));
    CHECK(empty.witness->values() == std::vector<BigInt>{1, 1});

    auto unsat = classify_subset(System(1, {Equation::succ(1, 1)}), 256);
    CHECK(unsat.status == SubsetStatus::UnsatCertified);
    CHECK_FALSE(unsat.maxnorm);
}

TEST_CASE("classify_subset reports the budget as unknown") {
    // x1 * x2 = x3 + 1 style systems with solutions only far out are not
    // needed; a tiny budget on a free system is enough.
    auto r = classify_subset(System(3, {Equation::mul(1, 2, 3), Equation::succ(3, 1)}), 256, 1);
    CHECK(r.status != SubsetStatus::Solved);
}

TEST_CASE("subset masks") {
    CHECK(subset_system(2, 0).empty());
    auto all = subset_system(2, (SubsetId{1} << 10) - 1);
    CHECK(all == universe(2));
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        SubsetId m = rng() & ((SubsetId{1} << 27) - 1);
        CHECK(subset_mask(subset_system(3, m)) == m);
    }
}

TEST_CASE("orbit representatives") {
    CHECK(orbit_representative(mask_of(2, {Equation::mul(2, 2, 2)}), 2) == mask_of(2, {Equation::mul(1, 1, 1)}));
    SubsetId s = mask_of(2, {Equation::succ(1, 2)});
    CHECK(orbit_representative(s, 2) == s);
    OrbitTable t3(3);
    CHECK(t3.orbit(mask_of(3, {Equation::mul(1, 1, 2)})).size() == 6);
    CHECK(t3.permutation_count() == 6);
    CHECK(t3.universe_bits() == 27);
}

TEST_CASE("orbit tables agree with relabeling systems directly") {
    OrbitTable t(3);
    std::mt19937_64 rng(17);
    std::vector<std::vector<VarIndex>> perms;
    std::vector<VarIndex> p{1, 2, 3};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    for (int trial = 0; trial < 200; ++trial) {
        SubsetId m = rng() & ((SubsetId{1} << 27) - 1);
        auto sys = subset_system(3, m);
        std::vector<SubsetId> images;
        for (const auto& pi : perms) {
            std::vector<Equation> eqs;
            for (const auto& e : sys.equations())
                eqs.push_back(e.is_mul() ? Equation::mul(pi[e.i - 1], pi[e.j - 1], pi[e.k - 1])
                                         : Equation::succ(pi[e.i - 1], pi[e.k - 1]));
            images.push_back(subset_mask(System(3, eqs)));
        }
        CHECK(t.representative(m) == *std::min_element(images.begin(), images.end()));
        CHECK(t.is_representative(m) == (t.representative(m) == m));
    }
}

TEST_CASE("theta(1) and theta(2) are exact") {
    ThetaOptions o1;
    o1.n = 1;
    auto r1 = enumerate_theta(o1);
    CHECK(r1.ledger.unknown_count == 0);
    CHECK(r1.ledger.exact());
    CHECK(r1.ledger.lower == 1);

    ThetaOptions o2;
    o2.n = 2;
    auto r2 = enumerate_theta(o2);
    CHECK(r2.ledger.unknown_count == 0);
    CHECK(r2.ledger.exact());
    CHECK(r2.ledger.lower == 2);
    CHECK(r2.ledger.upper == 2);
}

TEST_CASE("shards merge to the single-run ledger") {
    ThetaOptions o;
    o.n = 2;
    auto whole = enumerate_theta(o);
    ThetaLedger merged;
    merged.n = 2;
    for (std::size_t i = 0; i < 3; ++i) {
        ThetaOptions s = o;
        s.shard_index = i;
        s.shard_count = 3;
        merged.merge(enumerate_theta(s).ledger);
    }
    CHECK(merged == whole.ledger);

    ThetaOptions threaded = o;
    threaded.threads = 3;
    CHECK(enumerate_theta(threaded).ledger == whole.ledger);
}

TEST_CASE("theta rejects n >= 4 and bad shards") {
    ThetaOptions o;
    o.n = 4;
    CHECK_THROWS_AS(enumerate_theta(o), Error);
    o.n = 2;
    o.shard_index = 3;
    o.shard_count = 3;
    CHECK_THROWS_AS(enumerate_theta(o), Error);
}

TEST_CASE("checkpoint records round trip") {
    ClassificationRecord r;
    r.id = 0x1f3;
    r.status = SubsetStatus::Solved;
    r.maxnorm = BigInt(17);
    CHECK(format_record(r) == "1f3 SOLVED 17");
    auto back = parse_record(format_record(r));
    CHECK(back.id == r.id);
    CHECK(back.status == r.status);
    CHECK(back.maxnorm == r.maxnorm);
    CHECK(parse_record("0 UNSAT_CERTIFIED").status == SubsetStatus::UnsatCertified);
    for (const char* bad : {"zz SOLVED 3", "10 SOLVED", "10 UNKNOWN 4", "10 MAYBE", "10 SOLVED 0", "10 SOLVED x"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_record(bad), Error);
    }
}

TEST_CASE("checkpoint resume replays and appends") {
    auto path = temp_path("resume.ckpt");
    ThetaOptions o;
    o.n = 2;
    o.checkpoint = path;
    auto first = enumerate_theta(o);
    auto content = slurp(path);

    // Resume from a truncated file with a torn last line.
    auto cut = content.size() * 2 / 3;
    {
        std::ofstream out(path, std::ios::trunc);
        out << content.substr(0, cut);
    }
    auto resumed = enumerate_theta(o);
    CHECK(resumed.ledger == first.ledger);
    CHECK(resumed.replayed > 0);
    CHECK(slurp(path) == content);

    // Replaying a complete file is idempotent.
    auto again = enumerate_theta(o);
    CHECK(again.ledger == first.ledger);
    CHECK(slurp(path) == content);

    // A duplicate line is ignored.
    {
        std::ofstream out(path, std::ios::app);
        auto last_nl = content.rfind('\n', content.size() - 2);
        out << content.substr(last_nl + 1);
    }
    CHECK(enumerate_theta(o).ledger == first.ledger);
    std::filesystem::remove(path);
}

TEST_CASE("corrupt checkpoints are rejected") {
    auto path = temp_path("corrupt.ckpt");
    ThetaOptions o;
    o.n = 2;
    o.checkpoint = path;
    enumerate_theta(o);
    auto content = slurp(path);

    auto write = [&](const std::string& s) {
        std::ofstream out(path, std::ios::trunc);
        out << s;
    };
    // Out of order ids.
    auto first_nl = content.find('\n');
    auto second_nl = content.find('\n', first_nl + 1);
    auto third_nl = content.find('\n', second_nl + 1);
    write(content.substr(0, first_nl + 1) + content.substr(second_nl + 1, third_nl - second_nl) +
          content.substr(first_nl + 1, second_nl - first_nl));
    CHECK_THROWS_AS(enumerate_theta(o), Error);

    write("# enkit-theta n=3 cap=256 budget=100000 shard=0/1\n");
    CHECK_THROWS_AS(enumerate_theta(o), Error);

    write(checkpoint_header(o) + "\n1 SOLVED\n");
    CHECK_THROWS_AS(enumerate_theta(o), Error);

    write("1 SOLVED 1\n");
    CHECK_THROWS_AS(enumerate_theta(o), Error);
    std::filesystem::remove(path);
}

TEST_CASE("orbit invariance at n = 2 and a sample at n = 3") {
    auto c2 = orbit_invariance_check(2, 50, 1, 256);
    CHECK(c2.mismatches.empty());
    auto c3 = orbit_invariance_check(3, 40, 2, 256);
    CHECK(c3.orbits == 40);
    CHECK(c3.mismatches.empty());
}

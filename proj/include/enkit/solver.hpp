#pragma once

// Bounded search over systems of E_n equations: interval propagation to a
// fixpoint, univariate elimination, and value-by-value backtracking.
// Certificates computed over unbounded domains are valid for all positive
// (or non-negative) integers.

#include "enkit/bigint.hpp"
#include "enkit/system.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace enkit {

struct Domain {
    BigInt lo;
    std::optional<BigInt> hi;  // nullopt means +infinity

    static Domain unbounded(const BigInt& lo) { return {lo, std::nullopt}; }
    static Domain range(const BigInt& lo, const BigInt& hi) { return {lo, hi}; }
    static Domain single(const BigInt& v) { return {v, v}; }

    bool bounded() const { return hi.has_value(); }
    bool is_singleton() const { return hi && *hi == lo; }
    bool contains(const BigInt& v) const { return v >= lo && (!hi || v <= *hi); }

    bool operator==(const Domain&) const = default;
};

std::string to_string(const Domain& d);

using Domains = std::vector<Domain>;  // index 0 holds x_1

struct UnsatCertificate {
    enum class Kind {
        SuccCycle,        // x_a + 1 = ... = x_a around a cycle
        EmptyDomain,      // interval revision of `equation` emptied `variable`
        NoIntegerRoot,    // elimination on `variable` produced a polynomial without admissible roots
        PinnedViolation,  // every domain became a singleton that violates `equation`
    };

    Kind kind = Kind::EmptyDomain;
    std::vector<VarIndex> cycle;
    std::optional<Equation> equation;
    VarIndex variable = 0;
    std::string detail;

    std::string describe() const;
};

struct PropagationOptions {
    int min_value = 1;
    bool elimination = true;
    // Interval fixpoints over unbounded domains can climb forever
    // (x + 1 = x * y with y >= 2); stopping early keeps every result sound.
    // The cap counts revisions since elimination last narrowed a domain.
    std::uint64_t revision_cap = 20000;
    // Same story for bound sizes (x * x = x + 1 squares its lower bound on
    // every round); bounds wider than this are left untightened.
    std::size_t max_bound_bits = 1u << 16;
    unsigned max_elimination_degree = 64;
};

struct PropagationResult {
    bool unsat = false;
    Domains domains;
    std::optional<UnsatCertificate> certificate;
    std::uint64_t revisions = 0;
    bool capped = false;
};

PropagationResult propagate(const System& sys, Domains domains, const PropagationOptions& opts = {});

enum class Branching { SmallestDomain, IndexOrder };

enum class SolveStatus {
    Complete,        // the whole box was covered
    LimitReached,    // stopped after `limit` solutions
    BudgetExceeded,  // node budget ran out
    Unbounded,       // an unbounded variable could not be pinned; search incomplete
};

std::string to_string(SolveStatus s);

struct SolveOptions {
    int min_value = 1;
    std::size_t limit = std::numeric_limits<std::size_t>::max();
    std::uint64_t node_budget = 10'000'000;
    Branching branching = Branching::SmallestDomain;
    unsigned threads = 1;
    PropagationOptions propagation{};
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t propagations = 0;

    bool operator==(const SolveStats&) const = default;
};

struct SolveResult {
    std::vector<Assignment> solutions;  // sorted lexicographically
    bool exhausted = false;
    SolveStatus status = SolveStatus::Complete;
    SolveStats stats;

    bool operator==(const SolveResult&) const = default;
};

// All solutions in [min_value, bound]^n.
SolveResult solve_all(const System& sys, const BigInt& bound, const SolveOptions& opts = {});

// All solutions inside the given initial domains. Unbounded domains are
// never branched on; they must be pinned by propagation.
SolveResult solve_in(const System& sys, Domains initial, const SolveOptions& opts = {});

struct MinNormResult {
    enum class Status { Found, NoneUpToCap, BudgetExceeded };

    Status status = Status::NoneUpToCap;
    std::optional<Assignment> solution;
    SolveStats stats;
};

// Solution minimizing the max coordinate (ties: lexicographically smallest),
// by doubling the box bound 1, 2, 4, ... up to cap.
MinNormResult min_maxnorm_solution(const System& sys, const BigInt& cap, const SolveOptions& opts = {});

// Assignment when propagation over unbounded domains pins every variable
// to a value satisfying the system: a proof that it is the only solution.
std::optional<Assignment> certify_unique_pinned(const System& sys, int min_value = 1,
                                                const PropagationOptions& opts = {});

// Proof of unsatisfiability over all positive (or non-negative) integers.
std::optional<UnsatCertificate> certify_unsat(const System& sys, int min_value = 1, const PropagationOptions& opts = {});

}  // namespace enkit

#pragma once

// Conditional decision procedure: compile D = 0, take the conjectured bound
// B(w) with w = max(n, delta), and search the box up to that bound (or a
// practical cap).

#include "enkit/compiler.hpp"
#include "enkit/polynomial.hpp"
#include "enkit/solver.hpp"
#include "enkit/witnesses.hpp"

#include <optional>
#include <string>
#include <vector>

namespace enkit {

enum class Outcome { Yes, No, Inconclusive };

std::string to_string(Outcome o);

constexpr unsigned kDefaultDelta = 9;
constexpr unsigned long kDefaultDecideCap = 1000;

struct DecideOptions {
    unsigned delta = kDefaultDelta;
    BigInt cap{kDefaultDecideCap};
    std::optional<BigInt> assume_bound;  // test-only override of B(w)
    std::uint64_t node_budget = 10'000'000;
    CompileMode mode = CompileMode::Optimized;
    std::size_t var_cap = kDefaultVariableCap;
    std::uint64_t materialize_bits = kDefaultMaterializeBits;
};

struct Verdict {
    Outcome outcome = Outcome::Inconclusive;
    std::optional<std::vector<BigInt>> root;  // Yes: values of x_1..x_p
    std::size_t p = 0;                        // variables of D
    std::size_t n = 0;                        // variables of the compiled system
    unsigned delta = kDefaultDelta;
    std::size_t w = 0;                        // max(n, delta)
    BoundValue bound;                         // B(w)
    BigInt searched_bound;                    // effective box bound
    CompileMode mode = CompileMode::Optimized;

    bool conjecture_conditional = true;
    bool finite_solution_set_conditional = true;
    bool cap_limited = false;     // the box stopped short of B(w)
    bool override_bound = false;  // assume_bound replaced B(w)
    SolveStatus search_status = SolveStatus::Complete;
    SolveStats stats;

    bool operator==(const Verdict&) const = default;
};

// Throws Error(Degree) when D fails the degree precondition and
// Error(InvalidArgument) for delta < 9 without assume_bound.
Verdict decide(const Polynomial& d, const DecideOptions& opts = {});

}  // namespace enkit

#pragma once

// Aggregated verification reports used by the C API and the command line.

#include "enkit/serialize.hpp"

#include <optional>
#include <string_view>

namespace enkit {

// A function gadget in system text format. The input and output variables
// come from a `# tn: x1=A x2=B` comment; without one they are 1 and 2.
struct PhiInput {
    System phi;
    VarIndex x1 = 1;
    VarIndex x2 = 2;
};

PhiInput parse_phi_text(std::string_view text);

enum class WitnessFamily { Chain, Fermat, Tn };

WitnessFamily parse_witness_family(std::string_view s);
std::string to_string(WitnessFamily f);

struct WitnessOptions {
    WitnessFamily family = WitnessFamily::Chain;
    std::size_t n = 3;
    bool verify = false;
    std::optional<PhiInput> phi;           // Tn only; identity_phi() when absent
    BigInt tn_bound = 64;                  // Tn exhaustive search box
    std::uint64_t node_budget = 10'000'000;
    std::uint64_t factor_budget = kDefaultFactorBudget;
};

struct WitnessReport {
    System system;
    Json report;
    bool passed = true;  // false only when a verification step failed
};

WitnessReport witness_report(const WitnessOptions& opts);

struct CheckOptions {
    BoundConstants constants{};
    unsigned sweep_limit = 50;
    std::size_t chain_max_n = 8;
    std::size_t fermat_max_n = 4;
};

// Bound constants, the addition identity sweep, chain pinning and the
// Fermat closed solutions. "passed" is the conjunction of every entry.
Json check_report(const CheckOptions& opts = {});

}  // namespace enkit

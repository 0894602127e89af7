#pragma once

// Explicit systems with known solutions, the conjectured bound
// B(n) = (2^(2^(n-5)) - 1)^(2^(n-5)) + 1, and the numeric identities tied to
// them.

#include "enkit/bigint.hpp"
#include "enkit/system.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace enkit {

constexpr std::uint64_t kDefaultMaterializeBits = std::uint64_t{1} << 24;
constexpr std::uint64_t kDefaultFactorBudget = 1'000'000;

// x1*x1 = x1, x1 + 1 = x2, x_i * x_i = x_{i+1} for 2 <= i < n. Requires n >= 3.
System chain_system(std::size_t n);

// 2^(2^(n-2)): the last coordinate of the chain's unique solution.
BigInt chain_max(std::size_t n);

// x_i * x_i = x_{i+1} (1 <= i <= n), x1 + 1 = x_{n+2}, x_{n+2} + 1 = x_{n+3},
// x_{n+1} + 1 = x_{n+4}, x_{n+3} * x_{n+5} = x_{n+4}. Requires n >= 1.
System fermat_system(std::size_t n);

// 2^(2^k) + 1
BigInt fermat_number(std::size_t k);

// (a_1, ..., a_{n+5}) from the closed formulas; a_{n+5} by exact division.
// Throws Error(Materialization) when the values would exceed max_bits.
Assignment fermat_closed_solution(std::size_t n, std::uint64_t max_bits = kDefaultMaterializeBits);

// a_{n+5} = 1 + sum_{k=1}^{2^n} C(2^n, k) * F^(k-1) * (-2)^(2^n - k), F = 2^(2^n) + 1.
BigInt fermat_alternating_sum(std::size_t n);

struct FermatCertificate {
    enum class Status { Unique, NotUnique, Unknown };

    Status status = Status::Unknown;
    std::size_t n = 0;
    BigInt fermat;                     // F = 2^(2^n) + 1
    std::vector<BigInt> prime_factors;  // known so far, ascending
    std::vector<BigInt> divisors;       // all divisors d >= 2 when the factorization is complete
    std::vector<Assignment> solutions;  // x1 = d - 2 for each divisor (non-negative domain)
    std::string method;

    bool operator==(const FermatCertificate&) const = default;
};

std::string to_string(FermatCertificate::Status s);

// Solutions of fermat_system(n) over non-negative integers correspond to the
// divisors d >= 2 of F via x1 = d - 2. Factoring uses trial division by
// k * 2^(n+1) + 1 up to factor_budget, a table of known factors of F_5 and
// F_6, and deterministic primality checks for cofactors below 2^64.
FermatCertificate fermat_uniqueness_certificate(std::size_t n, std::uint64_t factor_budget = kDefaultFactorBudget,
                                                std::uint64_t max_bits = kDefaultMaterializeBits);

// The solution of fermat_system(n) with x1 = d - 2, for a divisor d >= 2 of F.
Assignment fermat_divisor_solution(std::size_t n, const BigInt& d);

// Deterministic for v < 2^64; throws Error(InvalidArgument) above that.
bool is_prime_u64(const BigInt& v);

struct TnSystem {
    System system;
    VarIndex x1 = 0;  // forced to n
    VarIndex x2 = 0;  // the function value
    VarIndex y = 0;   // x2 + 1
    VarIndex u = 0;   // 2 * floor(n/2)
    std::vector<VarIndex> t;        // t_1 .. t_{floor(n/2)}
    std::vector<VarIndex> padding;  // idempotent u_i
};

// Wraps phi (s variables, input x1 and output x2 at the given indices) into
// an n-variable system whose solutions force x1 = n and y = x2 + 1.
// Requires s >= 3 and n > 2s + 2.
TnSystem tn_system(const System& phi, VarIndex x1, VarIndex x2, std::size_t n);

// {x3 * x3 = x3, x3 * x1 = x2}: the identity function f(n) = n.
System identity_phi();

struct BoundValue {
    std::size_t n = 0;
    BigInt bits_estimate;         // 4^(n-5)
    std::optional<BigInt> value;  // nullopt: symbolic

    bool materialized() const { return value.has_value(); }
    std::string symbolic() const;

    bool operator==(const BoundValue&) const = default;
};

// B(n) for n >= 6; materialized iff 4^(n-5) <= limit_bits.
BoundValue conjecture_bound(std::size_t n, std::uint64_t limit_bits = kDefaultMaterializeBits);

struct IdentityCheck {
    std::string name;
    bool passed = false;
    std::string detail;

    bool operator==(const IdentityCheck&) const = default;
};

struct BoundConstants {
    BigInt b6{10};
    BigInt b7{50626};
    BigInt b8{"17878103347812890626"};
};

std::vector<IdentityCheck> bound_identity_report(const BoundConstants& expected = {});

struct ThetaEvidence {
    enum class Kind { None, HypotheticalBelowBound, MeasuredUpper };

    Kind kind = Kind::None;
    BigInt upper;  // MeasuredUpper: a certified theta(n) <= upper
};

struct ImplicationRecord {
    std::size_t n = 0;
    bool implied = false;
    std::string statement;

    bool operator==(const ImplicationRecord&) const = default;
};

// For n > 9: evidence that theta(n) < B(n) implies F_{n-5} is composite.
ImplicationRecord implications_report(std::size_t n, const ThetaEvidence& evidence);

}  // namespace enkit

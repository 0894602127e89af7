#pragma once

// Reduction of a polynomial equation D(x_1..x_p) = 0 to a system over the
// forms x_i * x_j = x_k and x_i + 1 = x_k whose positive solutions project
// bijectively onto the positive roots of D.

#include "enkit/polynomial.hpp"
#include "enkit/solver.hpp"
#include "enkit/system.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace enkit {

enum class CompileMode { Literal, Optimized };

std::string to_string(CompileMode m);
CompileMode parse_compile_mode(std::string_view s);

constexpr std::size_t kDefaultVariableCap = 10000;

// How an auxiliary variable is determined by lower-indexed variables.
struct AuxDefinition {
    enum class Op { One, Succ, Mul, Add };

    Op op = Op::One;
    VarIndex a = 0;
    VarIndex b = 0;
    std::string role;

    bool operator==(const AuxDefinition&) const = default;
};

std::string describe(const AuxDefinition& def);

struct CompilationMap {
    std::size_t p = 0;
    std::size_t n = 0;
    CompileMode mode = CompileMode::Optimized;
    std::vector<AuxDefinition> aux;  // aux[q - p - 1] defines x_q
    VarIndex result = 0;             // index shared by both sides
    std::uint64_t literal_bound = 0;  // upper bound on n in literal mode

    const AuxDefinition& definition(VarIndex q) const { return aux.at(q - p - 1); }

    // The unique positive extension of (x_1..x_p) to all n variables.
    std::vector<BigInt> lift(std::span<const BigInt> x) const;

    // Every variable as a polynomial in x_1..x_p (index 0 holds x_1).
    std::vector<Polynomial> expand() const;

    bool operator==(const CompilationMap&) const = default;
};

// Emits equations over fresh auxiliary variables. Indices 1..p are the
// original variables.
class CircuitBuilder {
public:
    CircuitBuilder(std::size_t p, CompileMode mode, std::size_t var_cap = kDefaultVariableCap);

    std::size_t n() const { return p_ + aux_.size(); }
    CompileMode mode() const { return mode_; }
    const std::vector<Equation>& equations() const { return equations_; }
    const std::vector<AuxDefinition>& aux() const { return aux_; }

    // Throws Error(VariableCap) when the cap would be exceeded.
    VarIndex fresh(AuxDefinition def);

    // Pinned 1 via v * v = v (memoized).
    VarIndex one();

    // x + y = z over nine fresh variables carrying zx, zx+1, zy, zy+1, z^2,
    // xy, xy+1, z^2(xy+1), z^2(xy+1)+1, closed by (zx+1)(zy+1) = z^2(xy+1)+1.
    void addition_gadget(VarIndex x, VarIndex y, VarIndex z);

    // Allocates z = x + y (or uses `target`) and emits the addition gadget.
    VarIndex add(VarIndex x, VarIndex y, std::optional<VarIndex> target = std::nullopt);

    VarIndex succ(VarIndex x, std::optional<VarIndex> target = std::nullopt);
    VarIndex mul(VarIndex x, VarIndex y, std::optional<VarIndex> target = std::nullopt);

    // Index forced to c >= 1. Literal: 1 then a successor chain. Optimized:
    // halving recursion (c even: 2 * (c/2), c odd: (c-1) + 1), memoized.
    VarIndex constant(const BigInt& c);

    // x_var^e by square-and-multiply, memoized per (var, e).
    VarIndex power(VarIndex var, std::uint32_t e);

    // Product of powers, memoized by exponent vector; e must be nonzero.
    VarIndex monomial(const Exponents& e);

private:
    std::size_t p_;
    CompileMode mode_;
    std::size_t cap_;
    std::vector<Equation> equations_;
    std::vector<AuxDefinition> aux_;
    std::optional<VarIndex> one_;
    std::map<BigInt, VarIndex> constants_;
    std::map<std::pair<VarIndex, std::uint32_t>, VarIndex> powers_;
    std::map<Exponents, VarIndex> monomials_;
};

struct Compilation {
    System system;
    CompilationMap map;
};

// Precondition: assert_degrees(d) passes (checked; throws Error(Degree)).
Compilation compile(const Polynomial& d, CompileMode mode = CompileMode::Optimized,
                    std::size_t var_cap = kDefaultVariableCap);

// Upper bound on the variable count of a literal-mode compilation.
std::uint64_t literal_variable_bound(const Polynomial& d);

// Compilation output in system text format, with the auxiliary map as comments.
std::string render_compilation(const Compilation& c);

struct ConditionReport {
    BigInt box;
    std::vector<std::vector<BigInt>> roots;         // roots of D in [1, box]^p, lexicographic
    std::vector<std::vector<BigInt>> projections;   // projections of solutions of T
    std::size_t solution_count = 0;
    bool bijective = false;        // projection is a bijection onto the roots
    bool unique_lifts = false;     // fixing a root and propagating pins every auxiliary
    bool lifts_match_map = false;  // and the pinned values equal map.lift(root)
    SolveStatus search_status = SolveStatus::Complete;
    SolveStats stats;

    bool operator==(const ConditionReport&) const = default;

    bool ok() const { return search_status == SolveStatus::Complete && bijective && unique_lifts && lifts_match_map; }
};

ConditionReport verify_conditions(const Polynomial& d, const Compilation& c, const BigInt& box,
                                  const SolveOptions& opts = {});

struct SweepResult {
    std::uint64_t cases = 0;
    std::uint64_t agreements = 0;  // identity holds iff x + y = z
    std::uint64_t solutions = 0;   // triples with x + y = z
};

// (zx+1)(zy+1) = z^2(xy+1)+1 versus x + y = z on [1, limit]^3.
SweepResult robinson_sweep(unsigned limit);

// Roots of d in [1, box]^p by direct evaluation.
std::vector<std::vector<BigInt>> brute_force_roots(const Polynomial& d, const BigInt& box);

}  // namespace enkit

#pragma once

// Equation systems over the two restricted forms x_i * x_j = x_k and
// x_i + 1 = x_k, with 1-based variable indices.

#include "enkit/bigint.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace enkit {

using VarIndex = std::uint32_t;

struct Equation {
    enum class Kind : std::uint8_t { Mul, Succ };

    Kind kind = Kind::Mul;
    VarIndex i = 0;
    VarIndex j = 0;  // unused (0) for Succ
    VarIndex k = 0;

    static constexpr Equation mul(VarIndex i, VarIndex j, VarIndex k) { return {Kind::Mul, i, j, k}; }
    static constexpr Equation succ(VarIndex i, VarIndex k) { return {Kind::Succ, i, 0, k}; }

    bool is_mul() const { return kind == Kind::Mul; }
    bool is_succ() const { return kind == Kind::Succ; }

    VarIndex max_index() const;

    // Mul with i <= j; Succ unchanged.
    Equation canonical() const;

    auto operator<=>(const Equation&) const = default;
    bool operator==(const Equation&) const = default;
};

std::string to_string(const Equation& eq);

class System {
public:
    System() = default;

    // Throws Error(IndexRange) when an index is outside [1, n] or n == 0.
    System(std::size_t n, std::vector<Equation> equations);

    std::size_t n() const { return n_; }
    const std::vector<Equation>& equations() const { return equations_; }
    std::size_t size() const { return equations_.size(); }
    bool empty() const { return equations_.empty(); }

    bool operator==(const System&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Equation> equations_;
};

class Assignment {
public:
    Assignment() = default;

    // Throws Error(InvalidArgument) if a value is below min_value or
    // min_value is not 0 or 1.
    explicit Assignment(std::vector<BigInt> values, int min_value = 1);

    std::size_t size() const { return values_.size(); }
    int min_value() const { return min_value_; }
    const std::vector<BigInt>& values() const { return values_; }

    // 1-based access, matching equation indices.
    const BigInt& at(VarIndex idx) const { return values_.at(idx - 1); }

    BigInt max_norm() const;

    bool operator==(const Assignment& o) const {
        return min_value_ == o.min_value_ && values_ == o.values_;
    }
    bool operator<(const Assignment& o) const { return values_ < o.values_; }

private:
    std::vector<BigInt> values_;
    int min_value_ = 1;
};

// Sorted (Mul before Succ, then lexicographic), duplicate-free, Mul with i <= j.
System canonicalize(const System& sys);

// The full canonical E_n: n^2(n+1)/2 Mul equations followed by n^2 Succ
// equations, in canonical order. This order defines subset bitmasks.
System universe(std::size_t n);

std::size_t universe_size(std::size_t n);

// Position of a canonical equation inside universe(n).
std::size_t universe_index(const Equation& canonical_eq, std::size_t n);

bool evaluate(const Equation& eq, std::span<const BigInt> values);
bool evaluate(const Equation& eq, const Assignment& a);

bool is_solution(const System& sys, std::span<const BigInt> values);
bool is_solution(const System& sys, const Assignment& a);

// Adds a fresh variable n+1 and the equation x_k * x_k = x_{n+1}.
System extend_with_square(const System& sys, VarIndex k);

// Text format: optional `vars N` header, one equation per line
// (`xI * xJ = xK` or `xI + 1 = xK`), `#` comments. Without a header n is
// the largest index mentioned.
struct ParsedSystemText {
    System system;
    std::vector<std::string> comments;  // comment bodies, `#` stripped, in order
};

ParsedSystemText parse_system_text_full(std::string_view text);
System parse_system_text(std::string_view text);

std::string render_system_text(const System& sys);

}  // namespace enkit

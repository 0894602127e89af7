#pragma once

// Multivariate integer polynomials over x_1..x_p, the equation parser, and
// the successor-coefficient split used by the compiler.

#include "enkit/bigint.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace enkit {

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order, largest first: higher total degree first,
// then lexicographically larger exponent vectors (x1 dominant).
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

std::uint64_t total_degree(const Exponents& e);

class Polynomial {
public:
    using Terms = std::map<Exponents, BigInt, GrlexGreater>;

    Polynomial() = default;
    explicit Polynomial(std::size_t num_vars) : p_(num_vars) {}

    static Polynomial constant(const BigInt& c, std::size_t num_vars = 0);
    // x_index, 1-based.
    static Polynomial variable(std::size_t index, std::size_t num_vars = 0);

    std::size_t num_vars() const { return p_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BigInt coefficient(const Exponents& e) const;
    BigInt constant_term() const;

    // Adds coeff to the coefficient at e (extending num_vars if needed);
    // drops the entry if it cancels.
    void add_term(Exponents e, const BigInt& coeff);

    Polynomial with_num_vars(std::size_t num_vars) const;

    std::uint64_t degree_in(std::size_t index) const;
    std::uint64_t total_degree() const;

    BigInt evaluate(std::span<const BigInt> point) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial& o) const { return p_ == o.p_ && terms_ == o.terms_; }

private:
    std::size_t p_ = 0;
    Terms terms_;
};

Polynomial pow(const Polynomial& base, std::uint32_t e);

// Parses `P = Q` or `P` (meaning `P = 0`) and returns P - Q normalized.
// num_vars is the highest variable index mentioned, even if it cancels.
// Throws Error(Parse) with the character position on malformed input.
Polynomial parse_equation(std::string_view text);

// Canonical rendering, e.g. "x1^2*x2 - 3*x1 + 7"; "0" for the zero polynomial.
std::string render(const Polynomial& d);

// Throws Error(Degree) naming the first variable x_i (i <= num_vars) that
// does not occur with positive degree.
void assert_degrees(const Polynomial& d);

// Replaces every coefficient c by |c| + 1.
Polynomial successor_polynomial(const Polynomial& d);

struct MonomialTerm {
    Exponents exponents;
    BigInt multiplicity;

    bool operator==(const MonomialTerm&) const = default;
};

// d = 0  <=>  sum(lhs) + lhs_units = sum(rhs) + rhs_units at positive points,
// where lhs/rhs are the non-constant parts of d + succ(d) and succ(d).
struct SplitSides {
    std::vector<MonomialTerm> lhs;
    BigInt lhs_units;
    std::vector<MonomialTerm> rhs;
    BigInt rhs_units;
};

SplitSides split_sides(const Polynomial& d);

}  // namespace enkit

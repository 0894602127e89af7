#pragma once

// Dense univariate integer polynomials and exact integer root isolation.

#include "enkit/bigint.hpp"

#include <optional>
#include <vector>

namespace enkit {

// coeffs[d] is the coefficient of v^d; trailing zeros are trimmed.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<BigInt> coeffs);

    static UPoly constant(const BigInt& c);
    static UPoly identity();

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt evaluate(const BigInt& v) const;
    UPoly derivative() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly plus_constant(long c) const;

    // Exact division of every coefficient by c; nullopt if any is not divisible.
    std::optional<UPoly> divide_exact(const BigInt& c) const;

    bool operator==(const UPoly&) const = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

// All integer roots r of p with lo <= r (and r <= *hi when given), ascending.
// p must be nonzero. The search interval is clipped to the Cauchy root bound,
// so an unbounded hi is fine.
std::vector<BigInt> integer_roots(const UPoly& p, const BigInt& lo, const std::optional<BigInt>& hi);

}  // namespace enkit

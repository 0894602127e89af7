#include "enkit/univariate.hpp"

#include "enkit/error.hpp"

#include <algorithm>

namespace enkit {

UPoly::UPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const BigInt& c) { return UPoly({c}); }

UPoly UPoly::identity() { return UPoly({BigInt(0), BigInt(1)}); }

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt UPoly::evaluate(const BigInt& v) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= v;
        acc += *it;
    }
    return acc;
}

UPoly UPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> out(coeffs_.size() - 1);
    for (std::size_t d = 1; d < coeffs_.size(); ++d) out[d - 1] = coeffs_[d] * static_cast<unsigned long>(d);
    return UPoly(std::move(out));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t d = 0; d < a.coeffs_.size(); ++d) out[d] += a.coeffs_[d];
    for (std::size_t d = 0; d < b.coeffs_.size(); ++d) out[d] += b.coeffs_[d];
    return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t d = 0; d < a.coeffs_.size(); ++d) out[d] += a.coeffs_[d];
    for (std::size_t d = 0; d < b.coeffs_.size(); ++d) out[d] -= b.coeffs_[d];
    return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(std::move(out));
}

UPoly UPoly::plus_constant(long c) const {
    std::vector<BigInt> out = coeffs_;
    if (out.empty()) out.emplace_back(0);
    out[0] += c;
    return UPoly(std::move(out));
}

std::optional<UPoly> UPoly::divide_exact(const BigInt& c) const {
    if (c == 0) return std::nullopt;
    std::vector<BigInt> out(coeffs_.size());
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (!mpz_divisible_p(coeffs_[d].get_mpz_t(), c.get_mpz_t())) return std::nullopt;
        mpz_divexact(out[d].get_mpz_t(), coeffs_[d].get_mpz_t(), c.get_mpz_t());
    }
    return UPoly(std::move(out));
}

namespace {

int sign_at(const UPoly& p, const BigInt& v) { return sgn(p.evaluate(v)); }

struct Piece {
    BigInt lo;
    BigInt hi;
};

// Splits [lo, hi] into pieces on which p is monotone over the reals. Gaps
// between pieces are open unit intervals, so every integer is covered.
std::vector<Piece> monotone_pieces(const UPoly& p, const BigInt& lo, const BigInt& hi) {
    if (p.degree() <= 1) return {{lo, hi}};
    UPoly q = p.derivative();
    std::vector<Piece> out;
    for (const auto& piece : monotone_pieces(q, lo, hi)) {
        // q is monotone on the piece, so it changes sign at most once.
        int sa = sign_at(q, piece.lo);
        int sb = sign_at(q, piece.hi);
        if (sa * sb >= 0) {
            out.push_back(piece);
            continue;
        }
        // First integer t with sign(q(t)) != sa.
        BigInt a = piece.lo;
        BigInt b = piece.hi;
        while (b - a > 1) {
            BigInt mid = floor_div(a + b, 2);
            if (sign_at(q, mid) == sa)
                a = mid;
            else
                b = mid;
        }
        out.push_back({piece.lo, a});
        out.push_back({b, piece.hi});
    }
    return out;
}

}  // namespace

std::vector<BigInt> integer_roots(const UPoly& p, const BigInt& lo, const std::optional<BigInt>& hi) {
    if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "integer_roots of the zero polynomial");
    if (p.degree() == 0) return {};

    const auto& c = p.coeffs();
    BigInt lead = abs(c.back());
    BigInt max_ratio = 0;
    for (std::size_t d = 0; d + 1 < c.size(); ++d) {
        BigInt r = ceil_div(abs(c[d]), lead);
        if (r > max_ratio) max_ratio = r;
    }
    BigInt bound = max_ratio + 1;  // Cauchy: every root has |r| <= bound

    BigInt a = std::max(lo, BigInt(-bound));
    BigInt b = hi ? std::min(*hi, bound) : bound;
    std::vector<BigInt> roots;
    if (a > b) return roots;

    for (const auto& piece : monotone_pieces(p, a, b)) {
        int sa = sign_at(p, piece.lo);
        int sb = sign_at(p, piece.hi);
        if (sa == 0) {
            roots.push_back(piece.lo);
            continue;
        }
        if (sb == 0) {
            roots.push_back(piece.hi);
            continue;
        }
        if (sa == sb) continue;
        BigInt x = piece.lo;
        BigInt y = piece.hi;
        while (y - x > 1) {
            BigInt mid = floor_div(x + y, 2);
            int sm = sign_at(p, mid);
            if (sm == 0) {
                x = y = mid;
                break;
            }
            if (sm == sa)
                x = mid;
            else
                y = mid;
        }
        if (x == y) roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace enkit

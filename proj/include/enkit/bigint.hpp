#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace enkit {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

// Throws enkit::Error(ErrorCode::Parse) on malformed input.
BigInt parse_decimal(std::string_view text);

inline BigInt pow2(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline std::size_t bit_length(const BigInt& v) {
    return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

// floor(sqrt(v)) for v >= 0.
inline BigInt isqrt(const BigInt& v) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace enkit

#include "enkit/witnesses.hpp"

#include "enkit/error.hpp"

#include <algorithm>
#include <map>

namespace enkit {

System chain_system(std::size_t n) {
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "chain_system needs n >= 3");
    std::vector<Equation> eqs;
    eqs.push_back(Equation::mul(1, 1, 1));
    eqs.push_back(Equation::succ(1, 2));
    for (VarIndex i = 2; i < n; ++i) eqs.push_back(Equation::mul(i, i, i + 1));
    return System(n, std::move(eqs));
}

BigInt chain_max(std::size_t n) {
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "chain_max needs n >= 3");
    return pow2(1UL << (n - 2));
}

System fermat_system(std::size_t n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "fermat_system needs n >= 1");
    auto m = static_cast<VarIndex>(n);
    std::vector<Equation> eqs;
    for (VarIndex i = 1; i <= m; ++i) eqs.push_back(Equation::mul(i, i, i + 1));
    eqs.push_back(Equation::succ(1, m + 2));
    eqs.push_back(Equation::succ(m + 2, m + 3));
    eqs.push_back(Equation::succ(m + 1, m + 4));
    eqs.push_back(Equation::mul(m + 3, m + 5, m + 4));
    return System(n + 5, std::move(eqs));
}

BigInt fermat_number(std::size_t k) {
    if (k >= 40) throw Error(ErrorCode::Materialization, "2^(2^" + std::to_string(k) + ")+1 is too large");
    return pow2(1UL << k) + 1;
}

namespace {

void check_guard(std::size_t n, const BigInt& base, std::uint64_t max_bits) {
    // The largest coordinate is about base^(2^n).
    if (n >= 60) throw Error(ErrorCode::Materialization, "exponent 2^" + std::to_string(n) + " is too large");
    BigInt bits = BigInt(static_cast<unsigned long>(bit_length(base))) * pow2(n);
    if (bits > BigInt(static_cast<unsigned long>(max_bits)))
        throw Error(ErrorCode::Materialization,
                    "solution needs about " + to_decimal(bits) + " bits, guard is " + std::to_string(max_bits));
}

// Coordinates of fermat_system(n) given x1 and d = x1 + 2.
std::vector<BigInt> fermat_tuple(std::size_t n, const BigInt& x1) {
    std::vector<BigInt> a(n + 5);
    a[0] = x1;
    for (std::size_t i = 1; i <= n; ++i) a[i] = a[i - 1] * a[i - 1];
    a[n + 1] = x1 + 1;
    a[n + 2] = x1 + 2;
    a[n + 3] = a[n] + 1;
    BigInt r;
    mpz_tdiv_qr(a[n + 4].get_mpz_t(), r.get_mpz_t(), a[n + 3].get_mpz_t(), a[n + 2].get_mpz_t());
    if (r != 0) throw Error(ErrorCode::Internal, "non-exact quotient in the Fermat tuple for n=" + std::to_string(n));
    return a;
}

}  // namespace

Assignment fermat_closed_solution(std::size_t n, std::uint64_t max_bits) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "fermat_closed_solution needs n >= 1");
    if (n >= 40) throw Error(ErrorCode::Materialization, "n too large to materialize");
    BigInt base = pow2(1UL << n) - 1;
    check_guard(n, base, max_bits);
    auto a = fermat_tuple(n, base);
    if (n <= 3 && a[n + 4] != fermat_alternating_sum(n))
        throw Error(ErrorCode::Internal, "quotient disagrees with the alternating sum for n=" + std::to_string(n));
    return Assignment(std::move(a), 1);
}

BigInt fermat_alternating_sum(std::size_t n) {
    if (n < 1 || n > 12) throw Error(ErrorCode::InvalidArgument, "alternating sum supported for 1 <= n <= 12");
    const unsigned long m = 1UL << n;
    const BigInt f = fermat_number(n);
    BigInt sum = 1;
    BigInt binom = 1;
    BigInt fpow = 1;  // F^(k-1)
    for (unsigned long k = 1; k <= m; ++k) {
        binom = binom * (m - k + 1) / k;
        BigInt term = binom * fpow * pow2(m - k);
        if ((m - k) % 2 == 1) term = -term;
        sum += term;
        fpow *= f;
    }
    return sum;
}

bool is_prime_u64(const BigInt& v) {
    if (v < 0 || bit_length(v) > 64) throw Error(ErrorCode::InvalidArgument, "primality check limited to values below 2^64");
    // GMP runs Baillie-PSW, which has no counterexamples below 2^64.
    return mpz_probab_prime_p(v.get_mpz_t(), 25) != 0;
}

std::string to_string(FermatCertificate::Status s) {
    switch (s) {
        case FermatCertificate::Status::Unique: return "UNIQUE";
        case FermatCertificate::Status::NotUnique: return "NOT_UNIQUE";
        case FermatCertificate::Status::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

Assignment fermat_divisor_solution(std::size_t n, const BigInt& d) {
    if (d < 2) throw Error(ErrorCode::InvalidArgument, "divisor must be at least 2");
    return Assignment(fermat_tuple(n, d - 2), 0);
}

namespace {

const std::map<std::size_t, std::vector<const char*>>& known_factors() {
    static const std::map<std::size_t, std::vector<const char*>> table = {
        {5, {"641", "6700417"}},
        {6, {"274177", "67280421310721"}},
    };
    return table;
}

}  // namespace

FermatCertificate fermat_uniqueness_certificate(std::size_t n, std::uint64_t factor_budget, std::uint64_t max_bits) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "fermat certificate needs n >= 1");
    FermatCertificate cert;
    cert.n = n;
    if (n >= 40 || (std::uint64_t{1} << n) > max_bits) {
        cert.method = "F exceeds the materialization guard";
        return cert;
    }
    cert.fermat = fermat_number(n);
    BigInt rest = cert.fermat;
    std::vector<BigInt> primes;
    std::vector<std::string> methods;

    // Every prime factor of F_n has the form k * 2^(n+1) + 1.
    bool exhausted = false;
    if (rest > 1) {
        const BigInt step = pow2(n + 1);
        const BigInt limit(static_cast<unsigned long>(factor_budget));
        BigInt q = step + 1;
        for (; q <= limit; q += step) {
            if (q * q > rest) {
                exhausted = true;
                break;
            }
            while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
                primes.push_back(q);
                rest /= q;
            }
        }
        if (q * q > rest) exhausted = true;
        methods.push_back("trial division to " + std::to_string(factor_budget));
    }

    if (auto it = known_factors().find(n); rest > 1 && !exhausted && it != known_factors().end()) {
        std::size_t before = primes.size();
        for (const char* s : it->second) {
            BigInt q(s);
            while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
                primes.push_back(q);
                rest /= q;
            }
        }
        if (primes.size() > before) methods.push_back("known factors");
    }

    bool complete = rest == 1;
    if (!complete && exhausted) {
        primes.push_back(rest);
        complete = true;
    } else if (!complete && bit_length(rest) <= 64) {
        if (is_prime_u64(rest)) {
            primes.push_back(rest);
            complete = true;
            methods.push_back("deterministic primality below 2^64");
        }
    }
    std::sort(primes.begin(), primes.end());
    cert.prime_factors = primes;
    for (std::size_t i = 0; i < methods.size(); ++i) cert.method += (i ? ", " : "") + methods[i];

    std::vector<BigInt> divs;
    if (!complete) {
        if (primes.empty()) return cert;
        // Composite, but the divisor list is partial.
        divs = primes;
        divs.push_back(cert.fermat);
        cert.status = FermatCertificate::Status::NotUnique;
        cert.method += "; cofactor " + to_decimal(rest) + " unfactored, divisor list partial";
    } else {
        divs = {1};
        for (std::size_t i = 0; i < primes.size();) {
            std::size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            std::vector<BigInt> next;
            for (const auto& d : divs) {
                BigInt pk = d;
                for (std::size_t e = i; e <= j; ++e) {
                    next.push_back(pk);
                    pk *= primes[i];
                }
            }
            divs = std::move(next);
            i = j;
        }
        divs.erase(std::remove(divs.begin(), divs.end(), BigInt(1)), divs.end());
        cert.status = divs.size() == 1 ? FermatCertificate::Status::Unique : FermatCertificate::Status::NotUnique;
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    cert.divisors = divs;
    for (const auto& d : divs) {
        try {
            check_guard(n, d, max_bits);
        } catch (const Error&) {
            continue;
        }
        cert.solutions.push_back(fermat_divisor_solution(n, d));
    }
    return cert;
}

TnSystem tn_system(const System& phi, VarIndex x1, VarIndex x2, std::size_t n) {
    const std::size_t s = phi.n();
    if (s < 3) throw Error(ErrorCode::InvalidArgument, "phi needs at least 3 variables");
    if (n <= 2 * s + 2)
        throw Error(ErrorCode::InvalidArgument,
                    "n = " + std::to_string(n) + " must exceed 2s+2 = " + std::to_string(2 * s + 2));
    if (x1 < 1 || x1 > s || x2 < 1 || x2 > s) throw Error(ErrorCode::IndexRange, "x1/x2 outside phi's variables");
    if (x1 == x2) throw Error(ErrorCode::InvalidArgument, "x1 and x2 must be distinct variables");

    const std::size_t half = n / 2;
    const std::size_t pad = n - half - s - 2;
    TnSystem t;
    t.x1 = x1;
    t.x2 = x2;
    std::vector<Equation> eqs = phi.equations();
    VarIndex next = static_cast<VarIndex>(s) + 1;
    for (std::size_t i = 0; i < pad; ++i) {
        t.padding.push_back(next);
        eqs.push_back(Equation::mul(next, next, next));
        ++next;
    }
    for (std::size_t i = 0; i < half; ++i) t.t.push_back(next++);
    t.u = next++;
    t.y = next++;
    eqs.push_back(Equation::mul(t.t[0], t.t[0], t.t[0]));
    for (std::size_t i = 0; i + 1 < half; ++i) eqs.push_back(Equation::succ(t.t[i], t.t[i + 1]));
    eqs.push_back(Equation::mul(t.t[1], t.t[half - 1], t.u));
    if (n % 2 == 1)
        eqs.push_back(Equation::succ(t.u, x1));
    else
        eqs.push_back(Equation::mul(t.t[0], t.u, x1));
    eqs.push_back(Equation::succ(x2, t.y));
    t.system = System(n, std::move(eqs));
    return t;
}

System identity_phi() { return System(3, {Equation::mul(3, 3, 3), Equation::mul(3, 1, 2)}); }

std::string BoundValue::symbolic() const {
    std::string k = std::to_string(n - 5);
    return "(2^(2^" + k + ")-1)^(2^" + k + ")+1";
}

BoundValue conjecture_bound(std::size_t n, std::uint64_t limit_bits) {
    if (n < 6) throw Error(ErrorCode::InvalidArgument, "the bound is defined for n >= 6");
    BoundValue b;
    b.n = n;
    const std::size_t k = n - 5;
    BigInt four(4);
    b.bits_estimate = pow(four, k);
    if (b.bits_estimate <= BigInt(static_cast<unsigned long>(limit_bits))) {
        const unsigned long e = 1UL << k;
        b.value = pow(pow2(e) - 1, e) + 1;
    }
    return b;
}

std::vector<IdentityCheck> bound_identity_report(const BoundConstants& expected) {
    std::vector<IdentityCheck> out;
    auto add = [&](std::string name, bool ok, std::string detail) {
        out.push_back({std::move(name), ok, std::move(detail)});
    };
    auto value = [](std::size_t n) { return *conjecture_bound(n).value; };

    const BigInt b6 = value(6), b7 = value(7), b8 = value(8), b9 = value(9);
    add("B(6) = 10", b6 == expected.b6, to_decimal(b6) + " vs expected " + to_decimal(expected.b6));
    add("B(6) < 2^16", b6 < pow2(16), to_decimal(b6) + " < 65536");
    add("B(7) = 50626", b7 == expected.b7, to_decimal(b7) + " vs expected " + to_decimal(expected.b7));
    add("B(7) < 2^32", b7 < pow2(32), to_decimal(b7) + " < 4294967296");
    add("B(8) = 17878103347812890626", b8 == expected.b8, to_decimal(b8) + " vs expected " + to_decimal(expected.b8));
    add("B(8) < 2^64", b8 < pow2(64), to_decimal(b8) + " < 18446744073709551616");
    add("B(9) = (2^16-1)^16+1", b9 == pow(BigInt(65535), 16) + 1, std::to_string(bit_length(b9)) + " bits");
    add("B(9) > 2^240", b9 > pow2(240), "bit length " + std::to_string(bit_length(b9)));
    add("2^240 > 2^(2^(9-2))", pow2(240) > pow2(1UL << 7), "2^240 > 2^128");
    for (std::size_t k = 1; k <= 3; ++k) {
        BigInt f = fermat_number(k);
        add("2^(2^" + std::to_string(k) + ")+1 is prime", is_prime_u64(f), to_decimal(f));
    }
    return out;
}

ImplicationRecord implications_report(std::size_t n, const ThetaEvidence& evidence) {
    if (n <= 9) throw Error(ErrorCode::InvalidArgument, "implications are stated for n > 9");
    ImplicationRecord r;
    r.n = n;
    const std::size_t k = n - 5;
    const std::string fk = "2^(2^" + std::to_string(k) + ")+1";
    bool below = false;
    switch (evidence.kind) {
        case ThetaEvidence::Kind::None: break;
        case ThetaEvidence::Kind::HypotheticalBelowBound: below = true; break;
        case ThetaEvidence::Kind::MeasuredUpper: {
            BoundValue b = conjecture_bound(n);
            if (b.value) {
                below = evidence.upper < *b.value;
            } else if (k < 60) {
                // B(n) > 2^((2^k - 1) * 2^k)
                BigInt e = (pow2(k) - 1) * pow2(k);
                below = BigInt(static_cast<unsigned long>(bit_length(evidence.upper))) <= e;
            }
            break;
        }
    }
    r.implied = below;
    r.statement = below ? fk + " is composite (conditional on the supplied evidence)"
                        : "no implication: the evidence does not place theta(" + std::to_string(n) + ") below " +
                              conjecture_bound(n, 0).symbolic();
    return r;
}

}  // namespace enkit

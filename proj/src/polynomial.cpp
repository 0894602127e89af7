#include "enkit/polynomial.hpp"

#include "enkit/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace enkit {

std::uint64_t total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint64_t{0}); }

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    auto da = total_degree(a);
    auto db = total_degree(b);
    if (da != db) return da > db;
    // Vectors inside one polynomial share a length; compare padded otherwise.
    std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        std::uint32_t ea = i < a.size() ? a[i] : 0;
        std::uint32_t eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea > eb;
    }
    return false;
}

Polynomial Polynomial::constant(const BigInt& c, std::size_t num_vars) {
    Polynomial out(num_vars);
    out.add_term(Exponents(num_vars, 0), c);
    return out;
}

Polynomial Polynomial::variable(std::size_t index, std::size_t num_vars) {
    if (index == 0) throw Error(ErrorCode::Parse, "variable index must be >= 1");
    Polynomial out(std::max(num_vars, index));
    Exponents e(out.p_, 0);
    e[index - 1] = 1;
    out.add_term(std::move(e), 1);
    return out;
}

BigInt Polynomial::coefficient(const Exponents& e) const {
    Exponents padded = e;
    padded.resize(p_, 0);
    auto it = terms_.find(padded);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt Polynomial::constant_term() const { return coefficient(Exponents(p_, 0)); }

void Polynomial::add_term(Exponents e, const BigInt& coeff) {
    if (coeff == 0) return;
    if (e.size() > p_) *this = with_num_vars(e.size());
    e.resize(p_, 0);
    auto [it, inserted] = terms_.try_emplace(std::move(e), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::with_num_vars(std::size_t num_vars) const {
    Polynomial out(std::max(num_vars, p_));
    for (const auto& [e, c] : terms_) {
        Exponents padded = e;
        padded.resize(out.p_, 0);
        out.terms_.emplace(std::move(padded), c);
    }
    return out;
}

std::uint64_t Polynomial::degree_in(std::size_t index) const {
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms_)
        if (index >= 1 && index <= e.size()) d = std::max<std::uint64_t>(d, e[index - 1]);
    return d;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, enkit::total_degree(e));
    return d;
}

BigInt Polynomial::evaluate(std::span<const BigInt> point) const {
    if (point.size() < p_) throw Error(ErrorCode::InvalidArgument, "evaluation point has too few coordinates");
    BigInt sum = 0;
    BigInt term;
    for (const auto& [e, c] : terms_) {
        term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term *= enkit::pow(point[i], e[i]);
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.p_ > p_) *this = with_num_vars(o.p_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.p_ > p_) *this = with_num_vars(o.p_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::size_t p = std::max(a.num_vars(), b.num_vars());
    Polynomial out(p);
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            Exponents e(p, 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            out.add_term(std::move(e), ca * cb);
        }
    }
    return out;
}

Polynomial pow(const Polynomial& base, std::uint32_t e) {
    Polynomial result = Polynomial::constant(1, base.num_vars());
    Polynomial sq = base;
    while (e > 0) {
        if (e & 1u) result = result * sq;
        e >>= 1;
        if (e > 0) sq = sq * sq;
    }
    return result;
}

namespace {

constexpr std::uint32_t kMaxExponent = 1u << 16;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        Polynomial lhs = expression();
        skip_ws();
        if (peek() == '=') {
            ++pos_;
            Polynomial rhs = expression();
            lhs -= rhs;
        }
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return lhs.with_num_vars(max_var_);
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::Parse, "syntax error at position " + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Polynomial expression() {
        Polynomial acc = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (peek() == '*') {
            ++pos_;
            acc = acc * unary();
        }
        return acc;
    }

    Polynomial unary() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (peek() == '^') {
            ++pos_;
            char c = peek();
            if (c == '-') fail("exponent must be a positive integer");
            std::string d = digits();
            if (d.empty()) fail("expected exponent");
            BigInt e(d, 10);
            if (e == 0) fail("exponent must be a positive integer");
            if (e > kMaxExponent) fail("exponent too large");
            return pow(base, static_cast<std::uint32_t>(e.get_ui()));
        }
        return base;
    }

    Polynomial primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expression();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            std::string d = digits();
            if (d.empty()) fail("expected variable index after 'x'");
            BigInt idx(d, 10);
            if (idx == 0) fail("variable index must be >= 1");
            if (idx > 1'000'000) fail("variable index too large");
            auto index = static_cast<std::size_t>(idx.get_ui());
            max_var_ = std::max(max_var_, index);
            return Polynomial::variable(index);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(BigInt(digits(), 10));
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t max_var_ = 0;
};

std::string monomial_text(const Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + 1);
        if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

Polynomial parse_equation(std::string_view text) { return Parser(text).parse(); }

std::string render(const Polynomial& d) {
    if (d.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : d.terms()) {
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono = monomial_text(e);
        if (mono.empty()) {
            out += to_decimal(mag);
        } else {
            if (mag != 1) out += to_decimal(mag) + '*';
            out += mono;
        }
    }
    return out;
}

void assert_degrees(const Polynomial& d) {
    if (d.num_vars() == 0) throw Error(ErrorCode::Degree, "equation mentions no variables");
    for (std::size_t i = 1; i <= d.num_vars(); ++i) {
        if (d.degree_in(i) == 0) throw Error(ErrorCode::Degree, "variable x" + std::to_string(i) + " has degree 0");
    }
}

Polynomial successor_polynomial(const Polynomial& d) {
    Polynomial out(d.num_vars());
    for (const auto& [e, c] : d.terms()) out.add_term(e, abs(c) + 1);
    return out;
}

SplitSides split_sides(const Polynomial& d) {
    Polynomial tilde = successor_polynomial(d);
    Polynomial sum = d + tilde;
    SplitSides out;
    auto collect = [](const Polynomial& poly, std::vector<MonomialTerm>& list, BigInt& units) {
        units = 1;
        for (const auto& [e, c] : poly.terms()) {
            if (total_degree(e) == 0)
                units += c;
            else
                list.push_back({e, c});
        }
    };
    collect(sum, out.lhs, out.lhs_units);
    collect(tilde, out.rhs, out.rhs_units);
    return out;
}

}  // namespace enkit

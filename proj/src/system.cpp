#include "enkit/system.hpp"

#include "enkit/error.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <regex>
#include <sstream>

namespace enkit {

BigInt parse_decimal(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size() ||
        !std::all_of(s.begin() + static_cast<long>(start), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw Error(ErrorCode::Parse, "not a decimal integer: '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
}

VarIndex Equation::max_index() const { return std::max({i, j, k}); }

Equation Equation::canonical() const {
    if (kind == Kind::Mul && i > j) return mul(j, i, k);
    return *this;
}

std::string to_string(const Equation& eq) {
    std::ostringstream os;
    if (eq.is_mul())
        os << 'x' << eq.i << " * x" << eq.j << " = x" << eq.k;
    else
        os << 'x' << eq.i << " + 1 = x" << eq.k;
    return os.str();
}

System::System(std::size_t n, std::vector<Equation> equations) : n_(n), equations_(std::move(equations)) {
    if (n_ == 0) throw Error(ErrorCode::IndexRange, "system must have at least one variable");
    for (const auto& eq : equations_) {
        bool bad = eq.i < 1 || eq.k < 1 || eq.i > n_ || eq.k > n_;
        if (eq.is_mul()) bad = bad || eq.j < 1 || eq.j > n_;
        if (bad) {
            throw Error(ErrorCode::IndexRange,
                        "equation '" + to_string(eq) + "' has an index outside [1, " + std::to_string(n_) + "]");
        }
    }
}

Assignment::Assignment(std::vector<BigInt> values, int min_value) : values_(std::move(values)), min_value_(min_value) {
    if (min_value_ != 0 && min_value_ != 1) throw Error(ErrorCode::InvalidArgument, "min_value must be 0 or 1");
    for (std::size_t idx = 0; idx < values_.size(); ++idx) {
        if (values_[idx] < min_value_) {
            throw Error(ErrorCode::InvalidArgument, "x" + std::to_string(idx + 1) + " = " + to_decimal(values_[idx]) +
                                                        " is below the minimum value " + std::to_string(min_value_));
        }
    }
}

BigInt Assignment::max_norm() const {
    BigInt best = 0;
    for (const auto& v : values_)
        if (v > best) best = v;
    return best;
}

System canonicalize(const System& sys) {
    std::vector<Equation> eqs;
    eqs.reserve(sys.size());
    for (const auto& eq : sys.equations()) eqs.push_back(eq.canonical());
    std::sort(eqs.begin(), eqs.end());
    eqs.erase(std::unique(eqs.begin(), eqs.end()), eqs.end());
    return System(sys.n(), std::move(eqs));
}

std::size_t universe_size(std::size_t n) { return n * n * (n + 1) / 2 + n * n; }

System universe(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::IndexRange, "universe requires n >= 1");
    std::vector<Equation> eqs;
    eqs.reserve(universe_size(n));
    for (VarIndex i = 1; i <= n; ++i)
        for (VarIndex j = i; j <= n; ++j)
            for (VarIndex k = 1; k <= n; ++k) eqs.push_back(Equation::mul(i, j, k));
    for (VarIndex i = 1; i <= n; ++i)
        for (VarIndex k = 1; k <= n; ++k) eqs.push_back(Equation::succ(i, k));
    return System(n, std::move(eqs));
}

std::size_t universe_index(const Equation& eq, std::size_t n) {
    if (eq.is_mul()) {
        std::size_t pairs_before = 0;
        for (std::size_t a = 1; a < eq.i; ++a) pairs_before += n - a + 1;
        pairs_before += eq.j - eq.i;
        return pairs_before * n + (eq.k - 1);
    }
    return n * n * (n + 1) / 2 + (eq.i - 1) * n + (eq.k - 1);
}

bool evaluate(const Equation& eq, std::span<const BigInt> values) {
    const BigInt& xi = values[eq.i - 1];
    const BigInt& xk = values[eq.k - 1];
    if (eq.is_succ()) return xi + 1 == xk;
    return xi * values[eq.j - 1] == xk;
}

bool evaluate(const Equation& eq, const Assignment& a) { return evaluate(eq, std::span<const BigInt>(a.values())); }

bool is_solution(const System& sys, std::span<const BigInt> values) {
    if (values.size() != sys.n()) return false;
    return std::all_of(sys.equations().begin(), sys.equations().end(),
                       [&](const Equation& eq) { return evaluate(eq, values); });
}

bool is_solution(const System& sys, const Assignment& a) { return is_solution(sys, std::span<const BigInt>(a.values())); }

System extend_with_square(const System& sys, VarIndex k) {
    if (k < 1 || k > sys.n())
        throw Error(ErrorCode::IndexRange, "extend_with_square: index " + std::to_string(k) + " out of range");
    auto eqs = sys.equations();
    auto fresh = static_cast<VarIndex>(sys.n() + 1);
    eqs.push_back(Equation::mul(k, k, fresh));
    return System(sys.n() + 1, std::move(eqs));
}

namespace {

VarIndex parse_index(const std::string& digits, std::size_t line_no) {
    VarIndex v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || v == 0) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": bad variable index 'x" + digits + "'");
    }
    return v;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

ParsedSystemText parse_system_text_full(std::string_view text) {
    static const std::regex mul_re(R"(^x(\d+)\s*\*\s*x(\d+)\s*=\s*x(\d+)$)");
    static const std::regex succ_re(R"(^x(\d+)\s*\+\s*1\s*=\s*x(\d+)$)");
    static const std::regex vars_re(R"(^vars\s+(\d+)$)");

    ParsedSystemText out;
    std::vector<Equation> eqs;
    std::optional<std::size_t> declared;
    std::size_t max_idx = 0;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) {
            out.comments.push_back(trim(raw.substr(hash + 1)));
            raw.erase(hash);
        }
        auto line = trim(raw);
        if (line.empty()) continue;

        std::smatch m;
        if (std::regex_match(line, m, vars_re)) {
            if (declared || !eqs.empty())
                throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": 'vars' must be the first statement");
            declared = std::stoul(m[1].str());
            if (*declared == 0) throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": vars must be >= 1");
        } else if (std::regex_match(line, m, mul_re)) {
            eqs.push_back(Equation::mul(parse_index(m[1], line_no), parse_index(m[2], line_no), parse_index(m[3], line_no)));
        } else if (std::regex_match(line, m, succ_re)) {
            eqs.push_back(Equation::succ(parse_index(m[1], line_no), parse_index(m[2], line_no)));
        } else {
            throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": cannot parse '" + line + "'");
        }
        if (!eqs.empty()) max_idx = std::max<std::size_t>(max_idx, eqs.back().max_index());
    }
    std::size_t n = declared ? *declared : max_idx;
    if (n == 0) throw Error(ErrorCode::Parse, "system text declares no variables");
    out.system = System(n, std::move(eqs));
    return out;
}

System parse_system_text(std::string_view text) { return parse_system_text_full(text).system; }

std::string render_system_text(const System& sys) {
    std::string out = "vars " + std::to_string(sys.n()) + "\n";
    for (const auto& eq : sys.equations()) {
        out += to_string(eq);
        out += '\n';
    }
    return out;
}

}  // namespace enkit

// Command-line front end over the C interface.

#include "enkit/enkit.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

using Json = nlohmann::json;

enum Exit { kOk = 0, kDomain = 1, kUsage = 2 };

// Failure that maps to an exit code and a message on stderr.
struct Failure {
    int code;
    std::string message;
};

struct Owned {
    char* p = nullptr;
    ~Owned() { enkit_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

void check(enkit_status s) {
    if (s == ENKIT_OK) return;
    std::string msg = std::string(enkit_status_name(s)) + ": " + enkit_last_error();
    throw Failure{s == ENKIT_E_IO ? kUsage : kDomain, msg};
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kUsage, "cannot read '" + path + "'"};
    std::stringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw Failure{kUsage, "error reading '" + path + "'"};
    return ss.str();
}

// Inline systems use ';' between equations.
std::string inline_system(std::string s) {
    for (auto& c : s)
        if (c == ';') c = '\n';
    return s;
}

using PolyPtr = std::unique_ptr<enkit_polynomial, decltype(&enkit_polynomial_free)>;
using SysPtr = std::unique_ptr<enkit_system, decltype(&enkit_system_free)>;

PolyPtr load_polynomial(const std::string& expr, const std::string& file) {
    std::string text = file.empty() ? expr : read_file(file);
    enkit_polynomial* p = nullptr;
    check(enkit_polynomial_parse(text.c_str(), &p));
    return PolyPtr(p, enkit_polynomial_free);
}

SysPtr load_system(const std::string& expr, const std::string& file) {
    std::string text = file.empty() ? inline_system(expr) : read_file(file);
    enkit_system* s = nullptr;
    check(enkit_system_parse(text.c_str(), &s));
    return SysPtr(s, enkit_system_free);
}

std::uint64_t env_budget(std::uint64_t fallback) {
    const char* v = std::getenv("ENKIT_BUDGET");
    if (!v || !*v) return fallback;
    try {
        std::size_t used = 0;
        auto b = std::stoull(v, &used);
        if (used != std::string(v).size() || b == 0) throw std::invalid_argument(v);
        return b;
    } catch (const std::exception&) {
        throw Failure{kUsage, std::string("ENKIT_BUDGET must be a positive integer, got '") + v + "'"};
    }
}

enkit_compile_mode mode_of(const std::string& m) { return m == "literal" ? ENKIT_MODE_LITERAL : ENKIT_MODE_OPTIMIZED; }

std::string commented(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) out += "# " + line + "\n";
    return out;
}

struct Config {
    std::string format;  // empty: the subcommand's default
    int verbosity = 0;

    std::string expr, file, mode = "optimized";
    std::string bound, limit_text;
    int min_value = 1;
    std::optional<std::uint64_t> budget;
    unsigned threads = 1;

    unsigned delta = 9;
    std::string cap, assume_bound;

    std::string family = "chain";
    std::size_t n = 3;
    bool verify = false;
    std::string phi;
    std::uint64_t factor_budget = 1'000'000;

    std::string shard = "0/1", resume;
    bool emit_unknowns = false;
};

void log(const Config& c, const std::string& msg) {
    if (c.verbosity > 0) std::cerr << "enkit: " << msg << "\n";
}

int run_compile(const Config& c) {
    auto p = load_polynomial(c.expr, c.file);
    Owned text, json;
    check(enkit_compile(p.get(), mode_of(c.mode), &text.p, &json.p));
    std::cout << (c.format == "json" ? json.str() : text.str());
    return kOk;
}

int run_solve(const Config& c) {
    auto s = load_system(c.expr, c.file);
    enkit_solve_options o;
    enkit_solve_options_init(&o);
    o.bound = c.bound.c_str();
    o.min_value = c.min_value;
    o.limit = c.limit_text.empty() ? 0 : std::stoull(c.limit_text);
    o.node_budget = c.budget ? *c.budget : env_budget(o.node_budget);
    o.threads = c.threads;
    log(c, "solving " + std::to_string(enkit_system_equations(s.get())) + " equations over " +
               std::to_string(enkit_system_variables(s.get())) + " variables");
    Owned json;
    check(enkit_solve(s.get(), &o, &json.p));
    if (c.format == "json") {
        std::cout << json.str();
        return kOk;
    }
    auto j = Json::parse(json.str());
    for (const auto& sol : j["solutions"]) {
        std::string line;
        for (const auto& v : sol["values"]) line += (line.empty() ? "" : " ") + v.get<std::string>();
        std::cout << line << "\n";
    }
    std::cout << "# " << j["solution_count"].get<std::size_t>() << " solutions, " << j["status"].get<std::string>()
              << "\n";
    return kOk;
}

int run_decide(const Config& c) {
    auto p = load_polynomial(c.expr, c.file);
    enkit_decide_options o;
    enkit_decide_options_init(&o);
    o.delta = c.delta;
    if (!c.cap.empty()) o.cap = c.cap.c_str();
    if (!c.assume_bound.empty()) o.assume_bound = c.assume_bound.c_str();
    o.node_budget = c.budget ? *c.budget : env_budget(o.node_budget);
    o.mode = mode_of(c.mode);
    Owned json;
    check(enkit_decide(p.get(), &o, &json.p));
    if (c.format == "json") {
        std::cout << json.str();
        return kOk;
    }
    auto j = Json::parse(json.str());
    std::cout << j["outcome"].get<std::string>();
    if (!j["root"].is_null()) {
        std::cout << " root";
        for (const auto& v : j["root"]) std::cout << " " << v.get<std::string>();
    }
    std::cout << "\n";
    return kOk;
}

int run_witness(const Config& c) {
    enkit_witness_options o;
    enkit_witness_options_init(&o);
    if (c.family == "chain") o.family = ENKIT_FAMILY_CHAIN;
    else if (c.family == "fermat") o.family = ENKIT_FAMILY_FERMAT;
    else o.family = ENKIT_FAMILY_TN;
    o.n = c.n;
    o.verify = c.verify;
    std::string phi_text;
    if (!c.phi.empty()) {
        phi_text = read_file(c.phi);
        o.phi_text = phi_text.c_str();
    }
    o.node_budget = c.budget ? *c.budget : env_budget(o.node_budget);
    o.factor_budget = c.factor_budget;
    Owned text, json;
    int passed = 1;
    check(enkit_witness(&o, &text.p, &json.p, &passed));
    if (c.format == "json") {
        std::cout << json.str();
    } else {
        // The report goes in comments so the output stays valid system text.
        std::cout << text.str();
        if (c.verify) {
            auto j = Json::parse(json.str());
            j.erase("system");
            std::cout << commented(j.dump(2));
        }
    }
    if (!passed) std::cerr << "enkit: witness verification failed\n";
    return passed ? kOk : kDomain;
}

std::pair<std::size_t, std::size_t> parse_shard(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) throw std::invalid_argument(s);
        std::size_t a = 0, b = 0;
        auto i = std::stoull(s.substr(0, slash), &a);
        auto k = std::stoull(s.substr(slash + 1), &b);
        if (a != slash || b != s.size() - slash - 1) throw std::invalid_argument(s);
        return {i, k};
    } catch (const std::exception&) {
        throw Failure{kUsage, "--shard expects i/k, got '" + s + "'"};
    }
}

int run_theta(const Config& c) {
    enkit_theta_options o;
    enkit_theta_options_init(&o);
    o.n = c.n;
    if (!c.cap.empty()) o.cap = c.cap.c_str();
    o.budget = c.budget ? *c.budget : env_budget(o.budget);
    auto [i, k] = parse_shard(c.shard);
    o.shard_index = i;
    o.shard_count = k;
    o.threads = c.threads;
    if (!c.resume.empty()) o.checkpoint = c.resume.c_str();
    o.emit_unknowns = c.emit_unknowns;
    log(c, "theta n=" + std::to_string(c.n) + " shard " + c.shard);
    Owned json;
    check(enkit_theta(&o, &json.p));
    if (c.format == "json") {
        std::cout << json.str();
        return kOk;
    }
    auto j = Json::parse(json.str());
    const auto& l = j["ledger"];
    std::cout << "n=" << l["n"] << " lower=" << l["theta_lower"].get<std::string>()
              << " upper=" << l["theta_upper_candidate"].get<std::string>() << " exact=" << l["exact"]
              << " classified=" << l["classified"] << " unknown=" << l["unknown_count"] << "\n";
    if (j.contains("unknown_ids"))
        for (const auto& id : j["unknown_ids"]) std::cout << id.get<std::string>() << " UNKNOWN\n";
    return kOk;
}

int run_check(const Config& c) {
    Owned json;
    int passed = 0;
    check(enkit_check(nullptr, &json.p, &passed));
    if (c.format == "json") {
        std::cout << json.str();
    } else {
        auto j = Json::parse(json.str());
        for (const auto& e : j["checks"])
            std::cout << (e["passed"].get<bool>() ? "PASS " : "FAIL ") << e["name"].get<std::string>() << ": "
                      << e["detail"].get<std::string>() << "\n";
    }
    if (!passed) std::cerr << "enkit: identity check failed\n";
    return passed ? kOk : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tools for the E_n equation systems: compilation, search, decision and theta bounds."};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", std::string(enkit_version()));

    Config c;
    auto formats = CLI::IsMember({"text", "json"});
    auto add_common = [&](CLI::App* sub, const std::string& default_format) {
        sub->add_option("--format", c.format, "Output format (default " + default_format + ")")->check(formats);
        sub->add_flag("-v,--verbose", c.verbosity, "Progress on stderr");
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", c.budget, "Node budget (default: $ENKIT_BUDGET or built in)")
            ->check(CLI::PositiveNumber);
    };
    auto add_input = [&](CLI::App* sub, const std::string& what) {
        auto* e = sub->add_option("-e,--expr", c.expr, "Inline " + what);
        auto* f = sub->add_option("input", c.file, "File holding the " + what + " ('-' for stdin)");
        e->excludes(f);
        f->excludes(e);
        sub->callback([e, f, sub] {
            if (e->count() == 0 && f->count() == 0) throw CLI::RequiredError(sub->get_name() + ": input or --expr");
        });
    };
    auto modes = CLI::IsMember({"literal", "optimized"});

    auto* compile = app.add_subcommand("compile", "Compile a polynomial equation to an E_n system");
    add_input(compile, "equation");
    compile->add_option("--mode", c.mode, "Gadget mode")->check(modes)->capture_default_str();

    auto* solve = app.add_subcommand("solve", "Enumerate solutions of a system inside [min, bound]^n");
    add_input(solve, "system (';' separates inline equations)");
    solve->add_option("--bound", c.bound, "Box bound (decimal)")->required();
    solve->add_option("--min-value", c.min_value, "Smallest admissible value")->check(CLI::IsMember({0, 1}))
        ->capture_default_str();
    solve->add_option("--limit", c.limit_text, "Stop after this many solutions")->check(CLI::PositiveNumber);
    add_budget(solve);
    solve->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 256u));

    auto* decide = app.add_subcommand("decide", "Bounded decision with the conjectured bound");
    add_input(decide, "equation");
    decide->add_option("--delta", c.delta, "Lower limit for w")->capture_default_str();
    decide->add_option("--cap", c.cap, "Largest box bound actually searched (decimal)");
    decide->add_option("--assume-bound", c.assume_bound, "Replace B(w) by this bound (flagged in the verdict)");
    decide->add_option("--mode", c.mode, "Gadget mode")->check(modes)->capture_default_str();
    add_budget(decide);

    auto* witness = app.add_subcommand("witness", "Emit and optionally verify a witness system");
    witness->add_option("--family", c.family, "Witness family")->check(CLI::IsMember({"chain", "fermat", "tn"}))
        ->capture_default_str();
    witness->add_option("--n", c.n, "Family parameter")->required();
    witness->add_flag("--verify", c.verify, "Run the verification report");
    witness->add_option("--phi", c.phi, "tn: gadget in system text format with a '# tn: x1=A x2=B' line");
    witness->add_option("--factor-budget", c.factor_budget, "fermat: trial division limit")->capture_default_str();
    add_budget(witness);

    auto* theta = app.add_subcommand("theta", "Enumerate E_n subsets and bracket theta(n)");
    theta->add_option("--n", c.n, "Number of variables (1 to 3)")->required();
    theta->add_option("--cap", c.cap, "Max-norm search cap (decimal, default 256)");
    theta->add_option("--shard", c.shard, "Shard i/k of the subset range")->capture_default_str();
    theta->add_option("--resume", c.resume, "Checkpoint file: replayed when present, appended to");
    theta->add_flag("--emit-unknowns", c.emit_unknowns, "List UNKNOWN subset ids");
    theta->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    add_budget(theta);

    auto* checks = app.add_subcommand("check", "Run the identity suite");

    for (auto* sub : {compile, witness}) add_common(sub, "text");
    for (auto* sub : {solve, decide, theta, checks}) add_common(sub, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (c.format.empty()) c.format = (*compile || *witness) ? "text" : "json";
    try {
        if (*compile) return run_compile(c);
        if (*solve) return run_solve(c);
        if (*decide) return run_decide(c);
        if (*witness) return run_witness(c);
        if (*theta) return run_theta(c);
        return run_check(c);
    } catch (const Failure& f) {
        std::cerr << "enkit: " << f.message << "\n";
        return f.code;
    }
}

#include "enkit/reports.hpp"

#include "enkit/error.hpp"

#include <regex>

namespace enkit {

PhiInput parse_phi_text(std::string_view text) {
    auto parsed = parse_system_text_full(text);
    PhiInput in;
    in.phi = std::move(parsed.system);
    static const std::regex designation(R"(^\s*tn:\s*x1\s*=\s*(\d+)\s+x2\s*=\s*(\d+)\s*$)");
    bool seen = false;
    for (const auto& c : parsed.comments) {
        if (c.find("tn:") == std::string::npos) continue;
        std::smatch m;
        if (!std::regex_match(c, m, designation)) throw Error(ErrorCode::Parse, "malformed designation '#" + c + "'");
        if (seen) throw Error(ErrorCode::Parse, "more than one tn designation");
        seen = true;
        auto x1 = std::stoul(m[1]);
        auto x2 = std::stoul(m[2]);
        if (x1 == 0 || x2 == 0 || x1 > in.phi.n() || x2 > in.phi.n())
            throw Error(ErrorCode::IndexRange, "designated variable outside the gadget");
        in.x1 = static_cast<VarIndex>(x1);
        in.x2 = static_cast<VarIndex>(x2);
    }
    return in;
}

WitnessFamily parse_witness_family(std::string_view s) {
    if (s == "chain") return WitnessFamily::Chain;
    if (s == "fermat") return WitnessFamily::Fermat;
    if (s == "tn") return WitnessFamily::Tn;
    throw Error(ErrorCode::InvalidArgument, "unknown witness family '" + std::string(s) + "'");
}

std::string to_string(WitnessFamily f) {
    switch (f) {
        case WitnessFamily::Chain: return "chain";
        case WitnessFamily::Fermat: return "fermat";
        case WitnessFamily::Tn: return "tn";
    }
    return "?";
}

namespace {

Json step(const std::string& name, bool passed, Json detail = Json::object()) {
    return Json{{"name", name}, {"passed", passed}, {"detail", std::move(detail)}};
}

void verify_chain(std::size_t n, const System& sys, Json& steps) {
    auto pinned = certify_unique_pinned(sys);
    bool ok = pinned && pinned->values().back() == chain_max(n);
    Json d{{"expected_max", chain_max(n)}};
    if (pinned) d["solution"] = *pinned;
    steps.push_back(step("unique pinned solution ends in 2^(2^(n-2))", ok, std::move(d)));
}

void verify_fermat(std::size_t n, const System& sys, const WitnessOptions& o, Json& steps) {
    auto closed = fermat_closed_solution(n);
    steps.push_back(step("closed solution satisfies the system", is_solution(sys, closed),
                         {{"solution", closed}, {"max_norm", closed.max_norm()}}));
    auto cert = fermat_uniqueness_certificate(n, o.factor_budget);
    bool consistent = true;
    for (const auto& s : cert.solutions) consistent = consistent && is_solution(sys, s);
    bool unique_ok = cert.status != FermatCertificate::Status::Unique ||
                     (cert.solutions.size() == 1 && cert.solutions.front().values() == closed.values());
    steps.push_back(step("divisor solutions satisfy the system", consistent && unique_ok, {{"certificate", cert}}));
}

void verify_tn(const TnSystem& t, std::size_t n, const WitnessOptions& o, Json& steps) {
    steps.push_back(step("variable count equals n", t.system.n() == n, {{"variables", t.system.n()}}));
    SolveOptions so;
    so.node_budget = o.node_budget;
    auto r = solve_all(t.system, o.tn_bound, so);
    bool forced = true;
    for (const auto& s : r.solutions)
        forced = forced && s.at(t.x1) == BigInt(static_cast<unsigned long>(n)) && s.at(t.y) == s.at(t.x2) + 1;
    // An incomplete search is reported, not failed: the construction is still checked on what was found.
    Json d{{"bound", o.tn_bound}, {"complete", r.status == SolveStatus::Complete}, {"search", r}};
    steps.push_back(step("every solution has x1 = n and y = x2 + 1", forced, std::move(d)));
}

}  // namespace

WitnessReport witness_report(const WitnessOptions& o) {
    WitnessReport out;
    Json meta{{"family", to_string(o.family)}, {"n", o.n}};
    Json steps = Json::array();
    switch (o.family) {
        case WitnessFamily::Chain:
            out.system = chain_system(o.n);
            meta["expected_max"] = chain_max(o.n);
            if (o.verify) verify_chain(o.n, out.system, steps);
            break;
        case WitnessFamily::Fermat:
            out.system = fermat_system(o.n);
            if (o.verify) verify_fermat(o.n, out.system, o, steps);
            break;
        case WitnessFamily::Tn: {
            PhiInput phi = o.phi ? *o.phi : PhiInput{identity_phi(), 1, 2};
            auto t = tn_system(phi.phi, phi.x1, phi.x2, o.n);
            out.system = t.system;
            meta["layout"] = {{"x1", t.x1}, {"x2", t.x2}, {"y", t.y}, {"u", t.u}, {"t", t.t}, {"padding", t.padding}};
            if (o.verify) verify_tn(t, o.n, o, steps);
            break;
        }
    }
    for (const auto& s : steps) out.passed = out.passed && s["passed"].get<bool>();
    if (o.verify) {
        meta["verification"] = std::move(steps);
        meta["passed"] = out.passed;
    }
    out.report = std::move(meta);
    return out;
}

Json check_report(const CheckOptions& o) {
    Json checks = Json::array();
    bool all = true;
    auto add = [&](const std::string& name, bool passed, const std::string& detail) {
        checks.push_back(IdentityCheck{name, passed, detail});
        all = all && passed;
    };
    for (const auto& c : bound_identity_report(o.constants)) add(c.name, c.passed, c.detail);

    auto sweep = robinson_sweep(o.sweep_limit);
    std::uint64_t expected = std::uint64_t{o.sweep_limit} * o.sweep_limit * o.sweep_limit;
    add("addition identity on [1," + std::to_string(o.sweep_limit) + "]^3", sweep.cases == expected && sweep.agreements == sweep.cases,
        std::to_string(sweep.agreements) + "/" + std::to_string(sweep.cases) + " cases agree");

    for (std::size_t n = 3; n <= o.chain_max_n; ++n) {
        auto pinned = certify_unique_pinned(chain_system(n));
        bool ok = pinned && pinned->values().back() == chain_max(n);
        add("chain(" + std::to_string(n) + ") pins 2^(2^" + std::to_string(n - 2) + ")", ok,
            pinned ? "max " + to_decimal(pinned->max_norm()) : "not pinned");
    }
    for (std::size_t n = 1; n <= o.fermat_max_n; ++n) {
        auto s = fermat_closed_solution(n);
        add("fermat(" + std::to_string(n) + ") closed solution", is_solution(fermat_system(n), s),
            "max " + to_decimal(s.max_norm()));
    }
    return Json{{"checks", checks}, {"passed", all}};
}

}  // namespace enkit

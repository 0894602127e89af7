#include "enkit/decision.hpp"

#include "enkit/error.hpp"

#include <algorithm>

namespace enkit {

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::Yes: return "YES";
        case Outcome::No: return "NO";
        case Outcome::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

Verdict decide(const Polynomial& d, const DecideOptions& opts) {
    if (opts.delta < kDefaultDelta && !opts.assume_bound)
        throw Error(ErrorCode::InvalidArgument, "delta must be at least 9 unless an assumed bound is given");
    if (opts.cap < 1) throw Error(ErrorCode::InvalidArgument, "cap must be >= 1");
    if (opts.assume_bound && *opts.assume_bound < 1)
        throw Error(ErrorCode::InvalidArgument, "assumed bound must be >= 1");

    auto c = compile(d, opts.mode, opts.var_cap);
    Verdict v;
    v.p = c.map.p;
    v.n = c.system.n();
    v.delta = opts.delta;
    v.w = std::max<std::size_t>(v.n, opts.delta);
    v.mode = opts.mode;
    v.bound = conjecture_bound(std::max<std::size_t>(v.w, 6), opts.materialize_bits);

    // The effective bound is whichever of B(w), cap and assume_bound is smallest.
    BigInt eff = opts.cap;
    bool eff_is_bound = false;
    bool eff_is_override = false;
    if (opts.assume_bound && *opts.assume_bound <= eff) {
        eff = *opts.assume_bound;
        eff_is_override = true;
    }
    if (v.bound.value && *v.bound.value <= eff) {
        eff = *v.bound.value;
        eff_is_bound = true;
        eff_is_override = false;
    }
    v.searched_bound = eff;
    v.override_bound = eff_is_override;
    v.cap_limited = !eff_is_bound && !eff_is_override;

    // Original variables range over [1, eff]; auxiliaries over [1, B(w)]
    // when B(w) is materialized, otherwise they must be pinned by propagation.
    Domains doms;
    for (std::size_t i = 0; i < v.n; ++i) {
        if (i < v.p)
            doms.push_back(Domain::range(1, eff));
        else if (v.bound.value)
            doms.push_back(Domain::range(1, *v.bound.value));
        else
            doms.push_back(Domain::unbounded(1));
    }

    SolveOptions so;
    so.limit = 1;
    so.node_budget = opts.node_budget;
    so.branching = Branching::IndexOrder;
    auto r = solve_in(c.system, std::move(doms), so);
    v.search_status = r.status;
    v.stats = r.stats;

    if (!r.solutions.empty()) {
        const auto& vals = r.solutions.front().values();
        std::vector<BigInt> root(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(v.p));
        if (d.with_num_vars(v.p).evaluate(root) != 0)
            throw Error(ErrorCode::Internal, "projected solution is not a root of the input polynomial");
        v.outcome = Outcome::Yes;
        v.root = std::move(root);
        return v;
    }
    if (r.status == SolveStatus::Complete && (eff_is_bound || eff_is_override))
        v.outcome = Outcome::No;
    else
        v.outcome = Outcome::Inconclusive;
    return v;
}

}  // namespace enkit

#include "enkit/solver.hpp"

#include "enkit/error.hpp"
#include "enkit/univariate.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>

namespace enkit {

std::string to_string(const Domain& d) {
    return "[" + to_decimal(d.lo) + ", " + (d.hi ? to_decimal(*d.hi) : std::string("inf")) + "]";
}

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Complete: return "complete";
        case SolveStatus::LimitReached: return "limit_reached";
        case SolveStatus::BudgetExceeded: return "budget_exceeded";
        case SolveStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

std::string UnsatCertificate::describe() const {
    switch (kind) {
        case Kind::SuccCycle: {
            std::string s = "successor cycle";
            for (auto v : cycle) s += " x" + std::to_string(v);
            return s;
        }
        case Kind::EmptyDomain:
            return "empty domain for x" + std::to_string(variable) +
                   (equation ? " while revising '" + to_string(*equation) + "'" : std::string());
        case Kind::NoIntegerRoot:
            return "no admissible integer value for x" + std::to_string(variable) + (detail.empty() ? "" : ": " + detail);
        case Kind::PinnedViolation:
            return "pinned values violate '" + (equation ? to_string(*equation) : std::string("?")) + "'";
    }
    return "unsat";
}

namespace {

// Structural data shared by every propagation call on one system.
class Propagator {
public:
    Propagator(const System& sys, const PropagationOptions& opts) : sys_(sys), opts_(opts), watches_(sys.n() + 1) {
        const auto& eqs = sys.equations();
        for (std::size_t e = 0; e < eqs.size(); ++e) {
            const auto& eq = eqs[e];
            watch(eq.i, e);
            watch(eq.k, e);
            if (eq.is_mul()) watch(eq.j, e);
        }
        find_succ_cycle();
    }

    const std::optional<UnsatCertificate>& structural_unsat() const { return cycle_cert_; }

    // Returns false on UNSAT (cert filled when non-null).
    bool run(Domains& d, std::uint64_t& revisions, bool& capped, UnsatCertificate* cert) {
        if (cycle_cert_) {
            if (cert) *cert = *cycle_cert_;
            return false;
        }
        for (std::size_t v = 0; v < d.size(); ++v) {
            if (d[v].lo < opts_.min_value) d[v].lo = opts_.min_value;
            if (d[v].hi && *d[v].hi < d[v].lo) {
                if (cert) *cert = {UnsatCertificate::Kind::EmptyDomain, {}, std::nullopt, static_cast<VarIndex>(v + 1), {}};
                return false;
            }
        }
        // Interval revisions run in slices with elimination in between, so
        // bounds that climb one step per revision (the addition gadget's sum)
        // get pinned by elimination instead of exhausting the budget. The
        // budget restarts whenever elimination narrows a domain; that can
        // happen only finitely often, since a narrowed domain is finite.
        const std::uint64_t slice = std::min<std::uint64_t>(opts_.revision_cap, 8 * sys_.size() + 64);
        std::uint64_t budget_left = opts_.revision_cap;
        queue_.clear();
        in_queue_.assign(sys_.size(), 0);
        for (std::size_t e = 0; e < sys_.size(); ++e) enqueue(e);

        for (;;) {
            std::uint64_t quota = std::min(slice, budget_left);
            auto state = interval_fixpoint(d, revisions, quota, cert);
            budget_left -= std::min(slice, budget_left) - quota;
            if (state == Fix::Unsat) return false;
            if (!opts_.elimination) {
                if (state == Fix::Done) return true;
                if (state == Fix::SliceOut && budget_left > 0) continue;
                return stop_capped(d, capped, cert);
            }
            if (state == Fix::Overgrown) return stop_capped(d, capped, cert);
            bool changed = false;
            for (VarIndex v = 1; v <= sys_.n(); ++v) {
                if (d[v - 1].is_singleton()) continue;
                auto r = eliminate(v, d, cert);
                if (r == Elim::Unsat) return false;
                if (r == Elim::Changed) {
                    for (auto e : watches_[v]) enqueue(e);
                    changed = true;
                    break;
                }
            }
            if (changed) {
                budget_left = opts_.revision_cap;
                continue;
            }
            if (state == Fix::Done) return true;
            if (budget_left == 0) return stop_capped(d, capped, cert);
        }
    }

private:
    enum class Elim { NoChange, Changed, Unsat };

    void watch(VarIndex v, std::size_t e) {
        auto& w = watches_[v];
        if (std::find(w.begin(), w.end(), e) == w.end()) w.push_back(e);
    }

    void enqueue(std::size_t e) {
        if (!in_queue_[e]) {
            in_queue_[e] = 1;
            queue_.push_back(e);
        }
    }

    void find_succ_cycle() {
        std::vector<std::vector<VarIndex>> succ(sys_.n() + 1);
        for (const auto& eq : sys_.equations())
            if (eq.is_succ()) succ[eq.i].push_back(eq.k);
        std::vector<int> color(sys_.n() + 1, 0);
        std::vector<VarIndex> stack;
        std::function<bool(VarIndex)> dfs = [&](VarIndex u) {
            color[u] = 1;
            stack.push_back(u);
            for (auto w : succ[u]) {
                if (color[w] == 1) {
                    auto it = std::find(stack.begin(), stack.end(), w);
                    UnsatCertificate c;
                    c.kind = UnsatCertificate::Kind::SuccCycle;
                    c.cycle.assign(it, stack.end());
                    c.cycle.push_back(w);
                    cycle_cert_ = c;
                    return true;
                }
                if (color[w] == 0 && dfs(w)) return true;
            }
            color[u] = 2;
            stack.pop_back();
            return false;
        };
        for (VarIndex v = 1; v <= sys_.n(); ++v)
            if (color[v] == 0 && dfs(v)) return;
    }

    // Domain tightening helpers; they record the touched variable.
    bool raise_lo(Domains& d, VarIndex v, const BigInt& lo) {
        auto& dom = d[v - 1];
        if (lo > dom.lo) {
            if (bit_length(lo) > opts_.max_bound_bits) {
                overgrown_ = true;
                return true;
            }
            dom.lo = lo;
            touched_.push_back(v);
        }
        return !(dom.hi && *dom.hi < dom.lo);
    }

    bool lower_hi(Domains& d, VarIndex v, const BigInt& hi) {
        auto& dom = d[v - 1];
        if (!dom.hi || hi < *dom.hi) {
            dom.hi = hi;
            touched_.push_back(v);
        }
        return !(*dom.hi < dom.lo);
    }

    bool revise_succ(const Equation& eq, Domains& d) {
        if (eq.i == eq.k) return false;
        const auto& di = d[eq.i - 1];
        if (!raise_lo(d, eq.k, di.lo + 1)) return false;
        if (d[eq.i - 1].hi && !lower_hi(d, eq.k, *d[eq.i - 1].hi + 1)) return false;
        const auto& dk = d[eq.k - 1];
        if (!raise_lo(d, eq.i, dk.lo - 1)) return false;
        if (d[eq.k - 1].hi && !lower_hi(d, eq.i, *d[eq.k - 1].hi - 1)) return false;
        return true;
    }

    bool revise_square(VarIndex i, VarIndex k, Domains& d) {
        BigInt t = d[i - 1].lo * d[i - 1].lo;
        if (!raise_lo(d, k, t)) return false;
        if (d[i - 1].hi && !lower_hi(d, k, *d[i - 1].hi * *d[i - 1].hi)) return false;
        // x_i in [ceil(sqrt(lo_k)), floor(sqrt(hi_k))]
        BigInt r = isqrt(d[k - 1].lo);
        if (r * r < d[k - 1].lo) r += 1;
        if (!raise_lo(d, i, r)) return false;
        if (d[k - 1].hi && !lower_hi(d, i, isqrt(*d[k - 1].hi))) return false;
        return true;
    }

    // x_a * x_b = x_c bounds for the factor x_a.
    bool revise_factor(VarIndex a, VarIndex b, VarIndex c, Domains& d) {
        const auto& db = d[b - 1];
        const auto& dc = d[c - 1];
        if (db.lo >= 1) {
            if (dc.hi && !lower_hi(d, a, floor_div(*d[c - 1].hi, d[b - 1].lo))) return false;
        }
        if (d[b - 1].hi && *d[b - 1].hi >= 1) {
            if (!raise_lo(d, a, ceil_div(d[c - 1].lo, *d[b - 1].hi))) return false;
        } else if (d[c - 1].lo >= 1) {
            if (!raise_lo(d, a, 1)) return false;
        }
        return true;
    }

    bool revise_mul(const Equation& eq, Domains& d) {
        const VarIndex i = eq.i, j = eq.j, k = eq.k;
        const bool positive = opts_.min_value >= 1;
        if (i == j && j == k) {
            // x * x = x: {1} over positives, {0, 1} over non-negatives.
            if (positive) return raise_lo(d, i, 1) && lower_hi(d, i, 1);
            return lower_hi(d, i, 1);
        }
        if (k == i || k == j) {
            // x_a * x_f = x_f
            VarIndex fixed = k;
            VarIndex other = (k == i) ? j : i;
            if (positive || d[fixed - 1].lo >= 1) return raise_lo(d, other, 1) && lower_hi(d, other, 1);
            if (d[other - 1].lo >= 2 || (d[other - 1].hi && *d[other - 1].hi == 0)) return lower_hi(d, fixed, 0);
            return true;
        }
        if (i == j) return revise_square(i, k, d);

        if (d[k - 1].lo >= 1) {
            if (!raise_lo(d, i, 1) || !raise_lo(d, j, 1)) return false;
        }
        if (!raise_lo(d, k, d[i - 1].lo * d[j - 1].lo)) return false;
        if (d[i - 1].hi && d[j - 1].hi) {
            if (!lower_hi(d, k, *d[i - 1].hi * *d[j - 1].hi)) return false;
        } else if ((d[i - 1].hi && *d[i - 1].hi == 0) || (d[j - 1].hi && *d[j - 1].hi == 0)) {
            if (!lower_hi(d, k, 0)) return false;
        }
        return revise_factor(i, j, k, d) && revise_factor(j, i, k, d);
    }

    enum class Fix { Done, SliceOut, Overgrown, Unsat };

    // Revises queued equations until the queue drains or quota runs out.
    Fix interval_fixpoint(Domains& d, std::uint64_t& revisions, std::uint64_t& quota, UnsatCertificate* cert) {
        const auto& eqs = sys_.equations();
        while (!queue_.empty()) {
            if (quota == 0) return Fix::SliceOut;
            --quota;
            std::size_t e = queue_.front();
            queue_.pop_front();
            in_queue_[e] = 0;
            ++revisions;
            touched_.clear();
            overgrown_ = false;
            const auto& eq = eqs[e];
            bool ok = eq.is_succ() ? revise_succ(eq, d) : revise_mul(eq, d);
            if (!ok) {
                if (cert) {
                    VarIndex v = touched_.empty() ? eq.k : touched_.back();
                    *cert = {UnsatCertificate::Kind::EmptyDomain, {}, eq, v, {}};
                    if (eq.is_succ() && eq.i == eq.k) *cert = {UnsatCertificate::Kind::SuccCycle, {eq.i, eq.i}, eq, eq.i, {}};
                }
                return Fix::Unsat;
            }
            if (overgrown_) return Fix::Overgrown;
            for (auto v : touched_)
                for (auto w : watches_[v])
                    if (w != e) enqueue(w);
        }
        return Fix::Done;
    }

    // Gives up on reaching a fixpoint; the domains stay sound. Elimination
    // can still refute the system outright.
    bool stop_capped(Domains& d, bool& capped, UnsatCertificate* cert) {
        capped = true;
        queue_.clear();
        std::fill(in_queue_.begin(), in_queue_.end(), 0);
        if (opts_.elimination)
            for (VarIndex v = 1; v <= sys_.n(); ++v)
                if (!d[v - 1].is_singleton() && eliminate(v, d, cert) == Elim::Unsat) return false;
        return true;
    }

    // Univariate elimination: treat x_v as the unknown, every singleton as a
    // constant, and derive polynomial expressions in x_v through the
    // equations. An equation whose variables all have expressions yields
    // P(x_v) = 0, which restricts x_v to the integer roots of P.
    Elim eliminate(VarIndex v, Domains& d, UnsatCertificate* cert) {
        const std::size_t n = sys_.n();
        exprs_.assign(n + 1, std::nullopt);
        exprs_[v] = UPoly::identity();
        std::vector<VarIndex> frontier{v};
        std::vector<char> seen_eq(sys_.size(), 0);
        std::optional<std::vector<BigInt>> candidates;
        const auto& eqs = sys_.equations();

        auto known = [&](VarIndex x) -> std::optional<UPoly> {
            if (exprs_[x]) return exprs_[x];
            if (d[x - 1].is_singleton()) return UPoly::constant(d[x - 1].lo);
            return std::nullopt;
        };
        auto derive = [&](VarIndex x, UPoly p) {
            if (p.degree() > static_cast<int>(opts_.max_elimination_degree)) return;
            exprs_[x] = std::move(p);
            frontier.push_back(x);
        };
        auto close = [&](const UPoly& p) -> bool {
            if (p.is_zero()) return true;
            auto roots = integer_roots(p, d[v - 1].lo, d[v - 1].hi);
            if (!candidates) {
                candidates = std::move(roots);
            } else {
                std::vector<BigInt> keep;
                std::set_intersection(candidates->begin(), candidates->end(), roots.begin(), roots.end(),
                                      std::back_inserter(keep));
                candidates = std::move(keep);
            }
            return !candidates->empty();
        };

        while (!frontier.empty()) {
            VarIndex u = frontier.back();
            frontier.pop_back();
            for (auto e : watches_[u]) {
                if (seen_eq[e]) continue;
                const auto& eq = eqs[e];
                auto ei = known(eq.i);
                auto ek = known(eq.k);
                if (eq.is_succ()) {
                    if (ei && ek) {
                        seen_eq[e] = 1;
                        if (!close(*ek - ei->plus_constant(1))) break;
                    } else if (ei) {
                        seen_eq[e] = 1;
                        derive(eq.k, ei->plus_constant(1));
                    } else if (ek) {
                        seen_eq[e] = 1;
                        derive(eq.i, ek->plus_constant(-1));
                    }
                    continue;
                }
                auto ej = known(eq.j);
                if (ei && ej && ek) {
                    seen_eq[e] = 1;
                    if (!close(*ei * *ej - *ek)) break;
                } else if (ei && ej) {
                    seen_eq[e] = 1;
                    derive(eq.k, *ei * *ej);
                } else if (ek && (ei || ej)) {
                    // x_k / c for a known constant factor c.
                    const auto& factor = ei ? *ei : *ej;
                    VarIndex target = ei ? eq.j : eq.i;
                    if (factor.degree() == 0) {
                        if (auto q = ek->divide_exact(factor.coeffs()[0])) {
                            seen_eq[e] = 1;
                            derive(target, std::move(*q));
                        }
                    }
                }
            }
            if (candidates && candidates->empty()) break;
        }

        if (!candidates) return Elim::NoChange;
        if (candidates->empty()) {
            if (cert) {
                *cert = {UnsatCertificate::Kind::NoIntegerRoot, {}, std::nullopt, v, "domain " + to_string(d[v - 1])};
            }
            return Elim::Unsat;
        }
        const BigInt& lo = candidates->front();
        const BigInt& hi = candidates->back();
        auto& dom = d[v - 1];
        bool changed = lo > dom.lo || !dom.hi || hi < *dom.hi;
        dom.lo = std::max(dom.lo, lo);
        dom.hi = dom.hi ? std::min(*dom.hi, hi) : hi;
        return changed ? Elim::Changed : Elim::NoChange;
    }

    const System& sys_;
    PropagationOptions opts_;
    std::vector<std::vector<std::size_t>> watches_;
    std::optional<UnsatCertificate> cycle_cert_;
    std::deque<std::size_t> queue_;
    std::vector<char> in_queue_;
    std::vector<VarIndex> touched_;
    bool overgrown_ = false;
    std::vector<std::optional<UPoly>> exprs_;
};

bool all_singletons(const Domains& d) {
    return std::all_of(d.begin(), d.end(), [](const Domain& x) { return x.is_singleton(); });
}

std::vector<BigInt> values_of(const Domains& d) {
    std::vector<BigInt> out;
    out.reserve(d.size());
    for (const auto& x : d) out.push_back(x.lo);
    return out;
}

const Equation* first_violation(const System& sys, const std::vector<BigInt>& vals) {
    for (const auto& eq : sys.equations())
        if (!evaluate(eq, vals)) return &eq;
    return nullptr;
}

Domains unbounded_domains(std::size_t n, int min_value) { return Domains(n, Domain::unbounded(min_value)); }

class Search {
public:
    Search(const System& sys, const SolveOptions& opts, std::atomic<std::uint64_t>& nodes)
        : sys_(sys), opts_(opts), prop_(sys, with_min(opts)), nodes_(nodes) {}

    static PropagationOptions with_min(const SolveOptions& o) {
        auto p = o.propagation;
        p.min_value = o.min_value;
        return p;
    }

    enum class Stop { No, Limit, Budget };

    // Propagates `d`; returns the branch variable (0 if leaf or failure).
    // `leaf_ok` set when a verified solution was recorded.
    VarIndex prepare(Domains& d, bool& failed) {
        bool capped = false;
        failed = !prop_.run(d, stats.propagations, capped, nullptr);
        if (failed) return 0;
        if (all_singletons(d)) {
            auto vals = values_of(d);
            if (is_solution(sys_, vals)) solutions.emplace_back(std::move(vals), opts_.min_value);
            return 0;
        }
        VarIndex best = 0;
        BigInt best_size;
        bool unbounded_left = false;
        for (VarIndex v = 1; v <= sys_.n(); ++v) {
            const auto& dom = d[v - 1];
            if (dom.is_singleton()) continue;
            if (!dom.bounded()) {
                unbounded_left = true;
                continue;
            }
            if (opts_.branching == Branching::IndexOrder) {
                best = v;
                break;
            }
            BigInt size = *dom.hi - dom.lo;
            if (best == 0 || size < best_size) {
                best = v;
                best_size = size;
            }
        }
        if (best == 0 && unbounded_left) unbounded = true;
        return best;
    }

    Stop dfs(Domains d) {
        if (nodes_.fetch_add(1) >= opts_.node_budget) return Stop::Budget;
        ++stats.nodes;
        bool failed = false;
        VarIndex var = prepare(d, failed);
        if (solutions.size() >= opts_.limit) return Stop::Limit;
        if (var == 0) return Stop::No;
        return branch(d, var, 0, 1);
    }

    // Children of `d` on `var`, taking every `stride`-th value from `offset`.
    Stop branch(const Domains& d, VarIndex var, unsigned offset, unsigned stride) {
        const BigInt hi = *d[var - 1].hi;
        for (BigInt val = d[var - 1].lo + offset; val <= hi; val += stride) {
            Domains child = d;
            child[var - 1] = Domain::single(val);
            Stop s = dfs(std::move(child));
            if (s != Stop::No) return s;
        }
        return Stop::No;
    }

    std::vector<Assignment> solutions;
    SolveStats stats;
    bool unbounded = false;

private:
    const System& sys_;
    const SolveOptions& opts_;
    Propagator prop_;
    std::atomic<std::uint64_t>& nodes_;
};

SolveResult finish(std::vector<Assignment> sols, SolveStats stats, Search::Stop stop, bool unbounded,
                   std::size_t limit) {
    SolveResult r;
    std::sort(sols.begin(), sols.end());
    if (sols.size() > limit) sols.resize(limit);
    r.solutions = std::move(sols);
    r.stats = stats;
    if (stop == Search::Stop::Budget)
        r.status = SolveStatus::BudgetExceeded;
    else if (stop == Search::Stop::Limit)
        r.status = SolveStatus::LimitReached;
    else if (unbounded)
        r.status = SolveStatus::Unbounded;
    else
        r.status = SolveStatus::Complete;
    r.exhausted = r.status == SolveStatus::Complete;
    return r;
}

}  // namespace

PropagationResult propagate(const System& sys, Domains domains, const PropagationOptions& opts) {
    if (domains.size() != sys.n()) throw Error(ErrorCode::InvalidArgument, "domain count does not match n");
    Propagator prop(sys, opts);
    PropagationResult r;
    UnsatCertificate cert;
    r.unsat = !prop.run(domains, r.revisions, r.capped, &cert);
    if (r.unsat) r.certificate = cert;
    r.domains = std::move(domains);
    return r;
}

SolveResult solve_in(const System& sys, Domains initial, const SolveOptions& opts) {
    if (initial.size() != sys.n()) throw Error(ErrorCode::InvalidArgument, "domain count does not match n");
    if (opts.limit == 0) throw Error(ErrorCode::InvalidArgument, "limit must be >= 1");
    std::atomic<std::uint64_t> nodes{0};

    if (opts.threads <= 1) {
        Search s(sys, opts, nodes);
        auto stop = s.dfs(std::move(initial));
        return finish(std::move(s.solutions), s.stats, stop, s.unbounded, opts.limit);
    }

    // Sharded: propagate the root once, then split the first branching
    // variable's values round-robin across workers.
    Search root(sys, opts, nodes);
    nodes.fetch_add(1);
    ++root.stats.nodes;
    bool failed = false;
    Domains d = std::move(initial);
    VarIndex var = root.prepare(d, failed);
    if (var == 0) return finish(std::move(root.solutions), root.stats, Search::Stop::No, root.unbounded, opts.limit);

    unsigned workers = opts.threads;
    std::vector<std::unique_ptr<Search>> parts;
    std::vector<Search::Stop> stops(workers, Search::Stop::No);
    for (unsigned t = 0; t < workers; ++t) parts.push_back(std::make_unique<Search>(sys, opts, nodes));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&, t] { stops[t] = parts[t]->branch(d, var, t, workers); });
    }
    std::vector<Assignment> sols;
    SolveStats stats = root.stats;
    bool unbounded = root.unbounded;
    Search::Stop stop = Search::Stop::No;
    for (unsigned t = 0; t < workers; ++t) {
        sols.insert(sols.end(), parts[t]->solutions.begin(), parts[t]->solutions.end());
        stats.nodes += parts[t]->stats.nodes;
        stats.propagations += parts[t]->stats.propagations;
        unbounded = unbounded || parts[t]->unbounded;
        if (stops[t] == Search::Stop::Budget) stop = Search::Stop::Budget;
        if (stops[t] == Search::Stop::Limit && stop == Search::Stop::No) stop = Search::Stop::Limit;
    }
    if (stop == Search::Stop::No && sols.size() >= opts.limit) stop = Search::Stop::Limit;
    return finish(std::move(sols), stats, stop, unbounded, opts.limit);
}

SolveResult solve_all(const System& sys, const BigInt& bound, const SolveOptions& opts) {
    if (opts.min_value != 0 && opts.min_value != 1) throw Error(ErrorCode::InvalidArgument, "min_value must be 0 or 1");
    if (bound < opts.min_value) throw Error(ErrorCode::InvalidArgument, "bound must be >= min_value");
    return solve_in(sys, Domains(sys.n(), Domain::range(opts.min_value, bound)), opts);
}

MinNormResult min_maxnorm_solution(const System& sys, const BigInt& cap, const SolveOptions& opts) {
    if (cap < 1) throw Error(ErrorCode::InvalidArgument, "cap must be >= 1");
    MinNormResult out;
    SolveOptions probe = opts;
    probe.limit = 1;

    auto exists = [&](const BigInt& b, std::optional<bool>& found) {
        auto r = solve_all(sys, b, probe);
        out.stats.nodes += r.stats.nodes;
        out.stats.propagations += r.stats.propagations;
        if (r.status == SolveStatus::BudgetExceeded || r.status == SolveStatus::Unbounded) return false;
        found = !r.solutions.empty();
        return true;
    };

    BigInt prev = opts.min_value == 0 ? BigInt(-1) : BigInt(0);
    BigInt bound = std::max(BigInt(1), BigInt(opts.min_value));
    for (;;) {
        if (bound > cap) bound = cap;
        std::optional<bool> found;
        if (!exists(bound, found)) {
            out.status = MinNormResult::Status::BudgetExceeded;
            return out;
        }
        if (*found) break;
        if (bound == cap) {
            out.status = MinNormResult::Status::NoneUpToCap;
            return out;
        }
        prev = bound;
        bound *= 2;
    }

    // Minimal bound m in (prev, bound] with a solution.
    BigInt lo = prev, hi = bound;
    while (hi - lo > 1) {
        BigInt mid = floor_div(lo + hi, 2);
        std::optional<bool> found;
        if (mid < opts.min_value) {
            lo = mid;
            continue;
        }
        if (!exists(mid, found)) {
            out.status = MinNormResult::Status::BudgetExceeded;
            return out;
        }
        if (*found)
            hi = mid;
        else
            lo = mid;
    }

    // Every solution in [min, hi]^n has max-norm exactly hi; index-order
    // branching with ascending values reaches the lexicographic minimum first.
    SolveOptions lex = probe;
    lex.branching = Branching::IndexOrder;
    auto r = solve_all(sys, hi, lex);
    out.stats.nodes += r.stats.nodes;
    out.stats.propagations += r.stats.propagations;
    if (r.solutions.empty()) {
        out.status = MinNormResult::Status::BudgetExceeded;
        return out;
    }
    out.status = MinNormResult::Status::Found;
    out.solution = r.solutions.front();
    return out;
}

std::optional<Assignment> certify_unique_pinned(const System& sys, int min_value, const PropagationOptions& opts) {
    auto p = opts;
    p.min_value = min_value;
    auto r = propagate(sys, unbounded_domains(sys.n(), min_value), p);
    if (r.unsat || !all_singletons(r.domains)) return std::nullopt;
    auto vals = values_of(r.domains);
    if (!is_solution(sys, vals)) return std::nullopt;
    return Assignment(std::move(vals), min_value);
}

std::optional<UnsatCertificate> certify_unsat(const System& sys, int min_value, const PropagationOptions& opts) {
    auto p = opts;
    p.min_value = min_value;
    auto r = propagate(sys, unbounded_domains(sys.n(), min_value), p);
    if (r.unsat) return r.certificate;
    if (all_singletons(r.domains)) {
        auto vals = values_of(r.domains);
        if (const auto* bad = first_violation(sys, vals)) {
            UnsatCertificate c;
            c.kind = UnsatCertificate::Kind::PinnedViolation;
            c.equation = *bad;
            return c;
        }
    }
    return std::nullopt;
}

}  // namespace enkit

#include "enkit/compiler.hpp"

#include "enkit/error.hpp"

#include <algorithm>
#include <set>

namespace enkit {

namespace {

// Unit additions up to this count use successor chains in optimized mode;
// larger ones add a pinned constant through one addition gadget.
constexpr unsigned long kUnitChainMax = 16;

std::string var(VarIndex v) { return "x" + std::to_string(v); }

}  // namespace

std::string to_string(CompileMode m) { return m == CompileMode::Literal ? "literal" : "optimized"; }

CompileMode parse_compile_mode(std::string_view s) {
    if (s == "literal") return CompileMode::Literal;
    if (s == "optimized") return CompileMode::Optimized;
    throw Error(ErrorCode::InvalidArgument, "unknown compile mode '" + std::string(s) + "'");
}

std::string describe(const AuxDefinition& def) {
    switch (def.op) {
        case AuxDefinition::Op::One: return "1";
        case AuxDefinition::Op::Succ: return var(def.a) + " + 1";
        case AuxDefinition::Op::Mul: return var(def.a) + " * " + var(def.b);
        case AuxDefinition::Op::Add: return var(def.a) + " + " + var(def.b);
    }
    return "?";
}

std::vector<BigInt> CompilationMap::lift(std::span<const BigInt> x) const {
    if (x.size() != p) throw Error(ErrorCode::InvalidArgument, "lift expects p coordinates");
    std::vector<BigInt> vals(x.begin(), x.end());
    vals.reserve(n);
    for (const auto& def : aux) {
        switch (def.op) {
            case AuxDefinition::Op::One: vals.emplace_back(1); break;
            case AuxDefinition::Op::Succ: vals.push_back(vals[def.a - 1] + 1); break;
            case AuxDefinition::Op::Mul: vals.push_back(vals[def.a - 1] * vals[def.b - 1]); break;
            case AuxDefinition::Op::Add: vals.push_back(vals[def.a - 1] + vals[def.b - 1]); break;
        }
    }
    return vals;
}

std::vector<Polynomial> CompilationMap::expand() const {
    std::vector<Polynomial> polys;
    polys.reserve(n);
    for (std::size_t i = 1; i <= p; ++i) polys.push_back(Polynomial::variable(i, p));
    for (const auto& def : aux) {
        switch (def.op) {
            case AuxDefinition::Op::One: polys.push_back(Polynomial::constant(1, p)); break;
            case AuxDefinition::Op::Succ: polys.push_back(polys[def.a - 1] + Polynomial::constant(1, p)); break;
            case AuxDefinition::Op::Mul: polys.push_back(polys[def.a - 1] * polys[def.b - 1]); break;
            case AuxDefinition::Op::Add: polys.push_back(polys[def.a - 1] + polys[def.b - 1]); break;
        }
    }
    return polys;
}

CircuitBuilder::CircuitBuilder(std::size_t p, CompileMode mode, std::size_t var_cap)
    : p_(p), mode_(mode), cap_(var_cap) {
    if (p_ > cap_) throw Error(ErrorCode::VariableCap, "variable cap is smaller than the number of inputs");
}

VarIndex CircuitBuilder::fresh(AuxDefinition def) {
    if (n() + 1 > cap_) {
        throw Error(ErrorCode::VariableCap, "variable cap of " + std::to_string(cap_) + " exceeded");
    }
    aux_.push_back(std::move(def));
    return static_cast<VarIndex>(n());
}

VarIndex CircuitBuilder::one() {
    if (!one_) {
        VarIndex v = fresh({AuxDefinition::Op::One, 0, 0, "1"});
        equations_.push_back(Equation::mul(v, v, v));
        one_ = v;
    }
    return *one_;
}

VarIndex CircuitBuilder::succ(VarIndex x, std::optional<VarIndex> target) {
    VarIndex k = target ? *target : fresh({AuxDefinition::Op::Succ, x, 0, var(x) + "+1"});
    equations_.push_back(Equation::succ(x, k));
    return k;
}

VarIndex CircuitBuilder::mul(VarIndex x, VarIndex y, std::optional<VarIndex> target) {
    VarIndex k = target ? *target : fresh({AuxDefinition::Op::Mul, x, y, var(x) + "*" + var(y)});
    equations_.push_back(Equation::mul(x, y, k).canonical());
    return k;
}

void CircuitBuilder::addition_gadget(VarIndex x, VarIndex y, VarIndex z) {
    using Op = AuxDefinition::Op;
    auto emit_mul = [&](VarIndex a, VarIndex b, const char* role) {
        VarIndex k = fresh({Op::Mul, a, b, role});
        equations_.push_back(Equation::mul(a, b, k).canonical());
        return k;
    };
    auto emit_succ = [&](VarIndex a, const char* role) {
        VarIndex k = fresh({Op::Succ, a, 0, role});
        equations_.push_back(Equation::succ(a, k));
        return k;
    };
    VarIndex zx = emit_mul(z, x, "z*x");
    VarIndex zx1 = emit_succ(zx, "z*x+1");
    VarIndex zy = emit_mul(z, y, "z*y");
    VarIndex zy1 = emit_succ(zy, "z*y+1");
    VarIndex zz = emit_mul(z, z, "z^2");
    VarIndex xy = emit_mul(x, y, "x*y");
    VarIndex xy1 = emit_succ(xy, "x*y+1");
    VarIndex big = emit_mul(zz, xy1, "z^2*(x*y+1)");
    VarIndex big1 = emit_succ(big, "z^2*(x*y+1)+1");
    equations_.push_back(Equation::mul(zx1, zy1, big1).canonical());
}

VarIndex CircuitBuilder::add(VarIndex x, VarIndex y, std::optional<VarIndex> target) {
    VarIndex z = target ? *target : fresh({AuxDefinition::Op::Add, x, y, var(x) + "+" + var(y)});
    addition_gadget(x, y, z);
    return z;
}

VarIndex CircuitBuilder::constant(const BigInt& c) {
    if (c < 1) throw Error(ErrorCode::InvalidArgument, "constant gadget requires c >= 1");
    if (c == 1) return one();
    if (auto it = constants_.find(c); it != constants_.end()) return it->second;
    VarIndex v;
    if (mode_ == CompileMode::Literal || c == 2 || c % 2 == 1) {
        v = succ(constant(c - 1));
    } else {
        VarIndex two = constant(2);
        VarIndex half = constant(c / 2);
        v = mul(two, half);
    }
    aux_[v - p_ - 1].role = "const " + to_decimal(c);
    constants_.emplace(c, v);
    return v;
}

VarIndex CircuitBuilder::power(VarIndex x, std::uint32_t e) {
    if (e == 0) throw Error(ErrorCode::InvalidArgument, "power gadget requires e >= 1");
    if (e == 1) return x;
    auto key = std::make_pair(x, e);
    if (auto it = powers_.find(key); it != powers_.end()) return it->second;
    VarIndex v;
    if (e % 2 == 0) {
        VarIndex half = power(x, e / 2);
        v = mul(half, half);
    } else {
        VarIndex rest = power(x, e - 1);
        v = mul(x, rest);
    }
    aux_[v - p_ - 1].role = var(x) + "^" + std::to_string(e);
    powers_.emplace(key, v);
    return v;
}

VarIndex CircuitBuilder::monomial(const Exponents& e) {
    if (total_degree(e) == 0) throw Error(ErrorCode::InvalidArgument, "monomial gadget requires a nonzero exponent vector");
    if (auto it = monomials_.find(e); it != monomials_.end()) return it->second;
    std::size_t last = e.size();
    while (last > 0 && e[last - 1] == 0) --last;
    std::size_t var_idx = last;  // 1-based index of the last occurring variable
    VarIndex pw = power(static_cast<VarIndex>(var_idx), e[var_idx - 1]);
    Exponents rest = e;
    rest[var_idx - 1] = 0;
    VarIndex v = pw;
    if (total_degree(rest) > 0) {
        VarIndex prefix = monomial(rest);
        v = mul(prefix, pw);
        aux_[v - p_ - 1].role = "monomial";
    }
    monomials_.emplace(e, v);
    return v;
}

namespace {

// Folds sum(terms) + units left to right; the final operation writes into
// `target` when given.
VarIndex build_side(CircuitBuilder& b, const std::vector<MonomialTerm>& terms, const BigInt& units,
                    std::optional<VarIndex> target) {
    std::vector<VarIndex> summands;
    for (const auto& t : terms) {
        VarIndex m = b.monomial(t.exponents);
        if (b.mode() == CompileMode::Literal) {
            if (!t.multiplicity.fits_ulong_p()) throw Error(ErrorCode::VariableCap, "coefficient too large for literal mode");
            for (unsigned long r = 0; r < t.multiplicity.get_ui(); ++r) summands.push_back(m);
        } else {
            summands.push_back(t.multiplicity == 1 ? m : b.mul(b.constant(t.multiplicity), m));
        }
    }

    BigInt chain = units;  // pending successor steps
    std::optional<VarIndex> unit_constant;
    VarIndex acc;
    if (summands.empty()) {
        if (b.mode() == CompileMode::Literal || units <= kUnitChainMax) {
            acc = b.one();
            chain = units - 1;
        } else {
            acc = b.constant(units);
            chain = 0;
        }
    } else {
        acc = summands.front();
        if (b.mode() == CompileMode::Optimized && units > kUnitChainMax) {
            unit_constant = b.constant(units);
            chain = 0;
        }
    }

    std::size_t adds = summands.empty() ? 0 : summands.size() - 1;
    if (unit_constant) ++adds;
    if (!chain.fits_ulong_p()) throw Error(ErrorCode::VariableCap, "unit count too large");
    unsigned long succs = chain.get_ui();
    std::size_t remaining = adds + succs;

    auto last = [&] { return --remaining == 0 ? target : std::nullopt; };
    for (std::size_t s = 1; s < summands.size(); ++s) acc = b.add(acc, summands[s], last());
    if (unit_constant) acc = b.add(acc, *unit_constant, last());
    for (unsigned long u = 0; u < succs; ++u) acc = b.succ(acc, last());

    if (target && acc != *target) acc = b.mul(b.one(), acc, target);
    return acc;
}

}  // namespace

std::uint64_t literal_variable_bound(const Polynomial& d) {
    auto sides = split_sides(d);
    std::uint64_t bound = d.num_vars() + 1;
    std::set<Exponents> distinct;
    auto add_side = [&](const std::vector<MonomialTerm>& terms, const BigInt& units) {
        for (const auto& t : terms) {
            distinct.insert(t.exponents);
            bound += 10 * t.multiplicity.get_ui();
        }
        bound += units.get_ui();
    };
    add_side(sides.lhs, sides.lhs_units);
    add_side(sides.rhs, sides.rhs_units);
    for (const auto& e : distinct) bound += total_degree(e);
    return bound;
}

Compilation compile(const Polynomial& d, CompileMode mode, std::size_t var_cap) {
    assert_degrees(d);
    auto sides = split_sides(d);
    CircuitBuilder b(d.num_vars(), mode, var_cap);
    VarIndex lhs = build_side(b, sides.lhs, sides.lhs_units, std::nullopt);
    build_side(b, sides.rhs, sides.rhs_units, lhs);

    Compilation out;
    out.system = System(b.n(), b.equations());
    out.map.p = d.num_vars();
    out.map.n = b.n();
    out.map.mode = mode;
    out.map.aux = b.aux();
    out.map.result = lhs;
    if (mode == CompileMode::Literal) {
        out.map.literal_bound = literal_variable_bound(d);
        if (out.map.n > out.map.literal_bound)
            throw Error(ErrorCode::Internal, "literal compilation exceeded its variable bound");
    }
    return out;
}

std::string render_compilation(const Compilation& c) {
    std::string out = "# compiled: p = " + std::to_string(c.map.p) + ", n = " + std::to_string(c.map.n) +
                      ", mode = " + to_string(c.map.mode) + ", sides meet at x" + std::to_string(c.map.result) + "\n";
    for (std::size_t q = c.map.p + 1; q <= c.map.n; ++q) {
        const auto& def = c.map.definition(static_cast<VarIndex>(q));
        out += "# aux x" + std::to_string(q) + " = " + describe(def) + "  (" + def.role + ")\n";
    }
    out += render_system_text(c.system);
    return out;
}

SweepResult robinson_sweep(unsigned limit) {
    SweepResult r;
    for (BigInt x = 1; x <= limit; ++x)
        for (BigInt y = 1; y <= limit; ++y)
            for (BigInt z = 1; z <= limit; ++z) {
                bool identity = (z * x + 1) * (z * y + 1) == z * z * (x * y + 1) + 1;
                bool sum = x + y == z;
                ++r.cases;
                if (identity == sum) ++r.agreements;
                if (sum) ++r.solutions;
            }
    return r;
}

std::vector<std::vector<BigInt>> brute_force_roots(const Polynomial& d, const BigInt& box) {
    std::vector<std::vector<BigInt>> roots;
    std::size_t p = d.num_vars();
    if (p == 0 || box < 1) return roots;
    std::vector<BigInt> point(p, BigInt(1));
    for (;;) {
        if (d.evaluate(point) == 0) roots.push_back(point);
        std::size_t i = p;
        while (i > 0) {
            --i;
            if (point[i] < box) {
                point[i] += 1;
                break;
            }
            point[i] = 1;
            if (i == 0) return roots;
        }
    }
}

ConditionReport verify_conditions(const Polynomial& d, const Compilation& c, const BigInt& box,
                                  const SolveOptions& opts) {
    if (box < 1) throw Error(ErrorCode::InvalidArgument, "box must be >= 1");
    const auto& map = c.map;
    ConditionReport rep;
    rep.box = box;
    rep.roots = brute_force_roots(d, box);

    Domains init(map.n, Domain::unbounded(1));
    for (std::size_t i = 0; i < map.p; ++i) init[i] = Domain::range(1, box);
    auto res = solve_in(c.system, init, opts);
    rep.search_status = res.status;
    rep.stats = res.stats;
    rep.solution_count = res.solutions.size();
    for (const auto& s : res.solutions)
        rep.projections.emplace_back(s.values().begin(), s.values().begin() + static_cast<long>(map.p));
    std::sort(rep.projections.begin(), rep.projections.end());
    bool distinct = std::adjacent_find(rep.projections.begin(), rep.projections.end()) == rep.projections.end();
    rep.bijective = distinct && rep.projections == rep.roots;

    rep.unique_lifts = true;
    rep.lifts_match_map = true;
    PropagationOptions popts = opts.propagation;
    popts.min_value = 1;
    for (const auto& root : rep.roots) {
        Domains fixed(map.n, Domain::unbounded(1));
        for (std::size_t i = 0; i < map.p; ++i) fixed[i] = Domain::single(root[i]);
        auto pr = propagate(c.system, fixed, popts);
        bool pinned = !pr.unsat && std::all_of(pr.domains.begin(), pr.domains.end(),
                                              [](const Domain& x) { return x.is_singleton(); });
        if (!pinned) {
            rep.unique_lifts = false;
            rep.lifts_match_map = false;
            continue;
        }
        std::vector<BigInt> vals;
        for (const auto& x : pr.domains) vals.push_back(x.lo);
        if (!is_solution(c.system, vals)) rep.unique_lifts = false;
        if (vals != map.lift(root)) rep.lifts_match_map = false;
    }
    return rep;
}

}  // namespace enkit

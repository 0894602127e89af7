#include "enkit/serialize.hpp"

#include "enkit/error.hpp"

#include <sstream>

void nlohmann::adl_serializer<mpz_class>::from_json(const json& j, mpz_class& v) {
    v = enkit::parse_decimal(j.get<std::string>());
}

namespace enkit {

NLOHMANN_JSON_SERIALIZE_ENUM(SolveStatus, {
                                              {SolveStatus::Complete, "complete"},
                                              {SolveStatus::LimitReached, "limit_reached"},
                                              {SolveStatus::BudgetExceeded, "budget_exceeded"},
                                              {SolveStatus::Unbounded, "unbounded"},
                                          })

NLOHMANN_JSON_SERIALIZE_ENUM(CompileMode, {
                                              {CompileMode::Literal, "literal"},
                                              {CompileMode::Optimized, "optimized"},
                                          })

NLOHMANN_JSON_SERIALIZE_ENUM(AuxDefinition::Op, {
                                                    {AuxDefinition::Op::One, "one"},
                                                    {AuxDefinition::Op::Succ, "succ"},
                                                    {AuxDefinition::Op::Mul, "mul"},
                                                    {AuxDefinition::Op::Add, "add"},
                                                })

NLOHMANN_JSON_SERIALIZE_ENUM(Outcome, {
                                          {Outcome::Yes, "YES"},
                                          {Outcome::No, "NO"},
                                          {Outcome::Inconclusive, "INCONCLUSIVE"},
                                      })

NLOHMANN_JSON_SERIALIZE_ENUM(FermatCertificate::Status, {
                                                            {FermatCertificate::Status::Unique, "UNIQUE"},
                                                            {FermatCertificate::Status::NotUnique, "NOT_UNIQUE"},
                                                            {FermatCertificate::Status::Unknown, "UNKNOWN"},
                                                        })

NLOHMANN_JSON_SERIALIZE_ENUM(SubsetStatus, {
                                               {SubsetStatus::UnsatCertified, "UNSAT_CERTIFIED"},
                                               {SubsetStatus::PinnedFinite, "PINNED_FINITE"},
                                               {SubsetStatus::Solved, "SOLVED"},
                                               {SubsetStatus::Unknown, "UNKNOWN"},
                                           })

NLOHMANN_JSON_SERIALIZE_ENUM(UnsatCertificate::Kind, {
                                                         {UnsatCertificate::Kind::SuccCycle, "succ_cycle"},
                                                         {UnsatCertificate::Kind::EmptyDomain, "empty_domain"},
                                                         {UnsatCertificate::Kind::NoIntegerRoot, "no_integer_root"},
                                                         {UnsatCertificate::Kind::PinnedViolation, "pinned_violation"},
                                                     })

namespace {

template <class T>
Json opt(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> get_opt(const Json& j, const char* key) {
    const auto& x = j.at(key);
    if (x.is_null()) return std::nullopt;
    return x.get<T>();
}

Json opt_id(const std::optional<SubsetId>& v) { return v ? Json(subset_id_hex(*v)) : Json(nullptr); }

std::optional<SubsetId> get_opt_id(const Json& j, const char* key) {
    const auto& x = j.at(key);
    if (x.is_null()) return std::nullopt;
    return parse_subset_id_hex(x.get<std::string>());
}

}  // namespace

std::string subset_id_hex(SubsetId id) {
    std::ostringstream os;
    os << std::hex << id;
    return os.str();
}

SubsetId parse_subset_id_hex(const std::string& s) {
    if (s.empty() || s.size() > 16 || s.find_first_not_of("0123456789abcdef") != std::string::npos)
        throw Error(ErrorCode::Parse, "bad subset id '" + s + "'");
    return std::stoull(s, nullptr, 16);
}

void to_json(Json& j, const Equation& e) {
    if (e.is_mul())
        j = Json{{"kind", "mul"}, {"i", e.i}, {"j", e.j}, {"k", e.k}};
    else
        j = Json{{"kind", "succ"}, {"i", e.i}, {"k", e.k}};
}

void from_json(const Json& j, Equation& e) {
    auto kind = j.at("kind").get<std::string>();
    if (kind == "mul")
        e = Equation::mul(j.at("i").get<VarIndex>(), j.at("j").get<VarIndex>(), j.at("k").get<VarIndex>());
    else if (kind == "succ")
        e = Equation::succ(j.at("i").get<VarIndex>(), j.at("k").get<VarIndex>());
    else
        throw Error(ErrorCode::Parse, "unknown equation kind '" + kind + "'");
}

void to_json(Json& j, const System& s) { j = Json{{"n", s.n()}, {"equations", s.equations()}}; }

void from_json(const Json& j, System& s) {
    s = System(j.at("n").get<std::size_t>(), j.at("equations").get<std::vector<Equation>>());
}

void to_json(Json& j, const Assignment& a) { j = Json{{"values", a.values()}, {"min_value", a.min_value()}}; }

void from_json(const Json& j, Assignment& a) {
    a = Assignment(j.at("values").get<std::vector<BigInt>>(), j.at("min_value").get<int>());
}

void to_json(Json& j, const SolveStats& s) { j = Json{{"nodes", s.nodes}, {"propagations", s.propagations}}; }

void from_json(const Json& j, SolveStats& s) {
    s.nodes = j.at("nodes").get<std::uint64_t>();
    s.propagations = j.at("propagations").get<std::uint64_t>();
}

void to_json(Json& j, const SolveResult& r) {
    j = Json{{"status", r.status}, {"exhausted", r.exhausted}, {"solution_count", r.solutions.size()},
             {"solutions", r.solutions}, {"stats", r.stats}};
}

void from_json(const Json& j, SolveResult& r) {
    r.status = j.at("status").get<SolveStatus>();
    r.exhausted = j.at("exhausted").get<bool>();
    r.solutions = j.at("solutions").get<std::vector<Assignment>>();
    r.stats = j.at("stats").get<SolveStats>();
}

void to_json(Json& j, const MinNormResult& r) {
    const char* status = r.status == MinNormResult::Status::Found         ? "found"
                         : r.status == MinNormResult::Status::NoneUpToCap ? "none_up_to_cap"
                                                                          : "budget_exceeded";
    j = Json{{"status", status}, {"solution", opt(r.solution)}, {"stats", r.stats}};
    if (r.solution) j["max_norm"] = r.solution->max_norm();
}

void to_json(Json& j, const UnsatCertificate& c) {
    j = Json{{"kind", c.kind}, {"description", c.describe()}};
    if (!c.cycle.empty()) j["cycle"] = c.cycle;
    if (c.equation) j["equation"] = *c.equation;
    if (c.variable) j["variable"] = c.variable;
}

void to_json(Json& j, const AuxDefinition& d) {
    j = Json{{"op", d.op}, {"a", d.a}, {"b", d.b}, {"role", d.role}, {"expression", describe(d)}};
}

void from_json(const Json& j, AuxDefinition& d) {
    d.op = j.at("op").get<AuxDefinition::Op>();
    d.a = j.at("a").get<VarIndex>();
    d.b = j.at("b").get<VarIndex>();
    d.role = j.at("role").get<std::string>();
}

void to_json(Json& j, const CompilationMap& m) {
    j = Json{{"p", m.p},           {"n", m.n}, {"mode", m.mode}, {"result", m.result}, {"literal_bound", m.literal_bound},
             {"aux", m.aux}};
}

void from_json(const Json& j, CompilationMap& m) {
    m.p = j.at("p").get<std::size_t>();
    m.n = j.at("n").get<std::size_t>();
    m.mode = j.at("mode").get<CompileMode>();
    m.result = j.at("result").get<VarIndex>();
    m.literal_bound = j.at("literal_bound").get<std::uint64_t>();
    m.aux = j.at("aux").get<std::vector<AuxDefinition>>();
}

void to_json(Json& j, const ConditionReport& r) {
    j = Json{{"box", r.box},
             {"roots", r.roots},
             {"projections", r.projections},
             {"solution_count", r.solution_count},
             {"bijective", r.bijective},
             {"unique_lifts", r.unique_lifts},
             {"lifts_match_map", r.lifts_match_map},
             {"search_status", r.search_status},
             {"stats", r.stats},
             {"ok", r.ok()}};
}

void from_json(const Json& j, ConditionReport& r) {
    r.box = j.at("box").get<BigInt>();
    r.roots = j.at("roots").get<std::vector<std::vector<BigInt>>>();
    r.projections = j.at("projections").get<std::vector<std::vector<BigInt>>>();
    r.solution_count = j.at("solution_count").get<std::size_t>();
    r.bijective = j.at("bijective").get<bool>();
    r.unique_lifts = j.at("unique_lifts").get<bool>();
    r.lifts_match_map = j.at("lifts_match_map").get<bool>();
    r.search_status = j.at("search_status").get<SolveStatus>();
    r.stats = j.at("stats").get<SolveStats>();
}

void to_json(Json& j, const BoundValue& b) {
    j = Json{{"n", b.n}, {"bits_estimate", b.bits_estimate}, {"value", opt(b.value)}, {"symbolic", b.symbolic()}};
}

void from_json(const Json& j, BoundValue& b) {
    b.n = j.at("n").get<std::size_t>();
    b.bits_estimate = j.at("bits_estimate").get<BigInt>();
    b.value = get_opt<BigInt>(j, "value");
}

void to_json(Json& j, const Verdict& v) {
    j = Json{{"outcome", v.outcome},
             {"root", opt(v.root)},
             {"p", v.p},
             {"n", v.n},
             {"delta", v.delta},
             {"w", v.w},
             {"bound", v.bound},
             {"searched_bound", v.searched_bound},
             {"mode", v.mode},
             {"flags",
              {{"conjecture_conditional", v.conjecture_conditional},
               {"finite_solution_set_conditional", v.finite_solution_set_conditional},
               {"cap_limited", v.cap_limited},
               {"override_bound", v.override_bound}}},
             {"search_status", v.search_status},
             {"stats", v.stats}};
}

void from_json(const Json& j, Verdict& v) {
    v.outcome = j.at("outcome").get<Outcome>();
    v.root = get_opt<std::vector<BigInt>>(j, "root");
    v.p = j.at("p").get<std::size_t>();
    v.n = j.at("n").get<std::size_t>();
    v.delta = j.at("delta").get<unsigned>();
    v.w = j.at("w").get<std::size_t>();
    v.bound = j.at("bound").get<BoundValue>();
    v.searched_bound = j.at("searched_bound").get<BigInt>();
    v.mode = j.at("mode").get<CompileMode>();
    const auto& f = j.at("flags");
    v.conjecture_conditional = f.at("conjecture_conditional").get<bool>();
    v.finite_solution_set_conditional = f.at("finite_solution_set_conditional").get<bool>();
    v.cap_limited = f.at("cap_limited").get<bool>();
    v.override_bound = f.at("override_bound").get<bool>();
    v.search_status = j.at("search_status").get<SolveStatus>();
    v.stats = j.at("stats").get<SolveStats>();
}

void to_json(Json& j, const FermatCertificate& c) {
    j = Json{{"status", c.status},   {"n", c.n},
             {"fermat", c.fermat},   {"prime_factors", c.prime_factors},
             {"divisors", c.divisors}, {"solutions", c.solutions},
             {"method", c.method}};
}

void from_json(const Json& j, FermatCertificate& c) {
    c.status = j.at("status").get<FermatCertificate::Status>();
    c.n = j.at("n").get<std::size_t>();
    c.fermat = j.at("fermat").get<BigInt>();
    c.prime_factors = j.at("prime_factors").get<std::vector<BigInt>>();
    c.divisors = j.at("divisors").get<std::vector<BigInt>>();
    c.solutions = j.at("solutions").get<std::vector<Assignment>>();
    c.method = j.at("method").get<std::string>();
}

void to_json(Json& j, const IdentityCheck& c) { j = Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}}; }

void from_json(const Json& j, IdentityCheck& c) {
    c.name = j.at("name").get<std::string>();
    c.passed = j.at("passed").get<bool>();
    c.detail = j.at("detail").get<std::string>();
}

void to_json(Json& j, const ImplicationRecord& r) {
    j = Json{{"n", r.n}, {"implied", r.implied}, {"statement", r.statement}};
}

void from_json(const Json& j, ImplicationRecord& r) {
    r.n = j.at("n").get<std::size_t>();
    r.implied = j.at("implied").get<bool>();
    r.statement = j.at("statement").get<std::string>();
}

void to_json(Json& j, const ClassificationRecord& r) {
    j = Json{{"id", subset_id_hex(r.id)},
             {"status", r.status},
             {"maxnorm", opt(r.maxnorm)},
             {"witness", opt(r.witness)},
             {"note", r.note}};
}

void from_json(const Json& j, ClassificationRecord& r) {
    r.id = parse_subset_id_hex(j.at("id").get<std::string>());
    r.status = j.at("status").get<SubsetStatus>();
    r.maxnorm = get_opt<BigInt>(j, "maxnorm");
    r.witness = get_opt<Assignment>(j, "witness");
    r.note = j.at("note").get<std::string>();
}

void to_json(Json& j, const ThetaLedger& l) {
    j = Json{{"n", l.n},
             {"theta_lower", l.lower},
             {"theta_upper_candidate", l.upper},
             {"lower_witness", opt_id(l.lower_witness)},
             {"upper_witness", opt_id(l.upper_witness)},
             {"unknown_count", l.unknown_count},
             {"unsat_count", l.unsat_count},
             {"pinned_count", l.pinned_count},
             {"solved_count", l.solved_count},
             {"classified", l.classified()},
             {"exact", l.exact()}};
}

void from_json(const Json& j, ThetaLedger& l) {
    l.n = j.at("n").get<std::size_t>();
    l.lower = j.at("theta_lower").get<BigInt>();
    l.upper = j.at("theta_upper_candidate").get<BigInt>();
    l.lower_witness = get_opt_id(j, "lower_witness");
    l.upper_witness = get_opt_id(j, "upper_witness");
    l.unknown_count = j.at("unknown_count").get<std::uint64_t>();
    l.unsat_count = j.at("unsat_count").get<std::uint64_t>();
    l.pinned_count = j.at("pinned_count").get<std::uint64_t>();
    l.solved_count = j.at("solved_count").get<std::uint64_t>();
}

}  // namespace enkit

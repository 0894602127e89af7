#pragma once

// JSON forms of the result types. Big integers are decimal strings, subset
// ids are hex strings; counters are plain numbers.

#include "enkit/compiler.hpp"
#include "enkit/decision.hpp"
#include "enkit/solver.hpp"
#include "enkit/system.hpp"
#include "enkit/theta.hpp"
#include "enkit/witnesses.hpp"

#include <json.hpp>

namespace nlohmann {

template <>
struct adl_serializer<mpz_class> {
    static void to_json(json& j, const mpz_class& v) { j = v.get_str(10); }
    static void from_json(const json& j, mpz_class& v);
};

}  // namespace nlohmann

namespace enkit {

using Json = nlohmann::json;

void to_json(Json& j, const Equation& e);
void from_json(const Json& j, Equation& e);
void to_json(Json& j, const System& s);
void from_json(const Json& j, System& s);
void to_json(Json& j, const Assignment& a);
void from_json(const Json& j, Assignment& a);
void to_json(Json& j, const SolveStats& s);
void from_json(const Json& j, SolveStats& s);
void to_json(Json& j, const SolveResult& r);
void from_json(const Json& j, SolveResult& r);
void to_json(Json& j, const MinNormResult& r);
void to_json(Json& j, const UnsatCertificate& c);
void to_json(Json& j, const AuxDefinition& d);
void from_json(const Json& j, AuxDefinition& d);
void to_json(Json& j, const CompilationMap& m);
void from_json(const Json& j, CompilationMap& m);
void to_json(Json& j, const ConditionReport& r);
void from_json(const Json& j, ConditionReport& r);
void to_json(Json& j, const BoundValue& b);
void from_json(const Json& j, BoundValue& b);
void to_json(Json& j, const Verdict& v);
void from_json(const Json& j, Verdict& v);
void to_json(Json& j, const FermatCertificate& c);
void from_json(const Json& j, FermatCertificate& c);
void to_json(Json& j, const IdentityCheck& c);
void from_json(const Json& j, IdentityCheck& c);
void to_json(Json& j, const ImplicationRecord& r);
void from_json(const Json& j, ImplicationRecord& r);
void to_json(Json& j, const ClassificationRecord& r);
void from_json(const Json& j, ClassificationRecord& r);
void to_json(Json& j, const ThetaLedger& l);
void from_json(const Json& j, ThetaLedger& l);

std::string subset_id_hex(SubsetId id);
SubsetId parse_subset_id_hex(const std::string& s);

}  // namespace enkit

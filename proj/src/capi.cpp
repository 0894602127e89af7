#include "enkit/enkit.h"

#include "enkit/error.hpp"
#include "enkit/reports.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

struct enkit_polynomial {
    enkit::Polynomial value;
};

struct enkit_system {
    enkit::System value;
};

namespace {

using namespace enkit;

thread_local std::string last_error;

enkit_status fail(enkit_status s, const std::string& msg) {
    last_error = msg;
    return s;
}

// Runs f, mapping every exception to a status code.
template <class F>
enkit_status guarded(F&& f) {
    try {
        f();
        last_error.clear();
        return ENKIT_OK;
    } catch (const Error& e) {
        return fail(static_cast<enkit_status>(e.code()), e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(ENKIT_E_PARSE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(ENKIT_E_MATERIALIZATION, "out of memory");
    } catch (const std::exception& e) {
        return fail(ENKIT_E_INTERNAL, e.what());
    } catch (...) {
        return fail(ENKIT_E_INTERNAL, "unknown failure");
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put(char** out, const std::string& s) {
    if (out) *out = dup(s);
}

void require(const void* p, const char* what) {
    if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

CompileMode mode_of(enkit_compile_mode m) {
    switch (m) {
        case ENKIT_MODE_OPTIMIZED: return CompileMode::Optimized;
        case ENKIT_MODE_LITERAL: return CompileMode::Literal;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown compile mode");
}

BigInt decimal(const char* s, const char* what) {
    require(s, what);
    return parse_decimal(s);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

extern "C" {

const char* enkit_version(void) { return ENKIT_VERSION; }

const char* enkit_status_name(enkit_status status) {
    switch (status) {
        case ENKIT_OK: return "ok";
        case ENKIT_E_INVALID_ARGUMENT: return "invalid_argument";
        case ENKIT_E_PARSE: return "parse";
        case ENKIT_E_INDEX_RANGE: return "index_range";
        case ENKIT_E_DEGREE: return "degree";
        case ENKIT_E_VARIABLE_CAP: return "variable_cap";
        case ENKIT_E_MATERIALIZATION: return "materialization";
        case ENKIT_E_CHECKPOINT: return "checkpoint";
        case ENKIT_E_IO: return "io";
        case ENKIT_E_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* enkit_last_error(void) { return last_error.c_str(); }

void enkit_string_free(char* s) { std::free(s); }

enkit_status enkit_polynomial_parse(const char* text, enkit_polynomial** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new enkit_polynomial{parse_equation(text)};
    });
}

enkit_status enkit_polynomial_render(const enkit_polynomial* p, char** out) {
    return guarded([&] {
        require(p, "polynomial");
        require(out, "out");
        *out = dup(render(p->value));
    });
}

void enkit_polynomial_free(enkit_polynomial* p) { delete p; }

enkit_status enkit_system_parse(const char* text, enkit_system** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new enkit_system{parse_system_text(text)};
    });
}

enkit_status enkit_system_render(const enkit_system* s, char** out) {
    return guarded([&] {
        require(s, "system");
        require(out, "out");
        *out = dup(render_system_text(s->value));
    });
}

enkit_status enkit_system_to_json(const enkit_system* s, char** out) {
    return guarded([&] {
        require(s, "system");
        require(out, "out");
        *out = dup(dump(Json(s->value)));
    });
}

size_t enkit_system_variables(const enkit_system* s) { return s ? s->value.n() : 0; }

size_t enkit_system_equations(const enkit_system* s) { return s ? s->value.size() : 0; }

void enkit_system_free(enkit_system* s) { delete s; }

enkit_status enkit_compile(const enkit_polynomial* p, enkit_compile_mode mode, char** out_text, char** out_json) {
    return guarded([&] {
        require(p, "polynomial");
        auto c = compile(p->value, mode_of(mode));
        std::string text = render_compilation(c);
        std::string json = dump(Json{{"polynomial", render(p->value)}, {"system", c.system}, {"map", c.map}});
        put(out_text, text);
        try {
            put(out_json, json);
        } catch (...) {
            if (out_text) std::free(*out_text);
            throw;
        }
    });
}

enkit_status enkit_verify_conditions(const enkit_polynomial* p, enkit_compile_mode mode, const char* box,
                                     char** out_json) {
    return guarded([&] {
        require(p, "polynomial");
        require(out_json, "out_json");
        auto c = compile(p->value, mode_of(mode));
        auto rep = verify_conditions(p->value, c, decimal(box, "box"));
        *out_json = dup(dump(rep));
    });
}

void enkit_solve_options_init(enkit_solve_options* o) {
    if (!o) return;
    o->bound = nullptr;
    o->min_value = 1;
    o->limit = 0;
    o->node_budget = SolveOptions{}.node_budget;
    o->threads = 1;
}

enkit_status enkit_solve(const enkit_system* s, const enkit_solve_options* o, char** out_json) {
    return guarded([&] {
        require(s, "system");
        require(o, "options");
        require(out_json, "out_json");
        SolveOptions so;
        so.min_value = o->min_value;
        if (o->limit) so.limit = o->limit;
        so.node_budget = o->node_budget;
        so.threads = o->threads ? o->threads : 1;
        auto r = solve_all(s->value, decimal(o->bound, "bound"), so);
        *out_json = dup(dump(r));
    });
}

void enkit_decide_options_init(enkit_decide_options* o) {
    if (!o) return;
    DecideOptions d;
    o->delta = d.delta;
    o->cap = nullptr;
    o->assume_bound = nullptr;
    o->node_budget = d.node_budget;
    o->mode = ENKIT_MODE_OPTIMIZED;
}

enkit_status enkit_decide(const enkit_polynomial* p, const enkit_decide_options* o, char** out_json) {
    return guarded([&] {
        require(p, "polynomial");
        require(o, "options");
        require(out_json, "out_json");
        DecideOptions d;
        d.delta = o->delta;
        if (o->cap) d.cap = decimal(o->cap, "cap");
        if (o->assume_bound) d.assume_bound = decimal(o->assume_bound, "assume_bound");
        d.node_budget = o->node_budget;
        d.mode = mode_of(o->mode);
        *out_json = dup(dump(decide(p->value, d)));
    });
}

void enkit_witness_options_init(enkit_witness_options* o) {
    if (!o) return;
    WitnessOptions w;
    o->family = ENKIT_FAMILY_CHAIN;
    o->n = w.n;
    o->verify = 0;
    o->phi_text = nullptr;
    o->node_budget = w.node_budget;
    o->factor_budget = w.factor_budget;
}

enkit_status enkit_witness(const enkit_witness_options* o, char** out_text, char** out_json, int* out_passed) {
    return guarded([&] {
        require(o, "options");
        WitnessOptions w;
        switch (o->family) {
            case ENKIT_FAMILY_CHAIN: w.family = WitnessFamily::Chain; break;
            case ENKIT_FAMILY_FERMAT: w.family = WitnessFamily::Fermat; break;
            case ENKIT_FAMILY_TN: w.family = WitnessFamily::Tn; break;
            default: throw Error(ErrorCode::InvalidArgument, "unknown witness family");
        }
        w.n = o->n;
        w.verify = o->verify != 0;
        if (o->phi_text) {
            if (w.family != WitnessFamily::Tn) throw Error(ErrorCode::InvalidArgument, "a gadget applies to tn only");
            w.phi = parse_phi_text(o->phi_text);
        }
        w.node_budget = o->node_budget;
        w.factor_budget = o->factor_budget;
        auto r = witness_report(w);
        std::string text = render_system_text(r.system);
        auto report = r.report;
        report["system"] = r.system;
        std::string json = dump(report);
        put(out_text, text);
        try {
            put(out_json, json);
        } catch (...) {
            if (out_text) std::free(*out_text);
            throw;
        }
        if (out_passed) *out_passed = r.passed ? 1 : 0;
    });
}

void enkit_theta_options_init(enkit_theta_options* o) {
    if (!o) return;
    ThetaOptions t;
    o->n = t.n;
    o->cap = nullptr;
    o->budget = t.budget;
    o->shard_index = t.shard_index;
    o->shard_count = t.shard_count;
    o->threads = t.threads;
    o->checkpoint = nullptr;
    o->emit_unknowns = 0;
}

enkit_status enkit_theta(const enkit_theta_options* o, char** out_json) {
    return guarded([&] {
        require(o, "options");
        require(out_json, "out_json");
        ThetaOptions t;
        t.n = o->n;
        if (o->cap) t.cap = decimal(o->cap, "cap");
        t.budget = o->budget;
        t.shard_index = o->shard_index;
        t.shard_count = o->shard_count;
        t.threads = o->threads ? o->threads : 1;
        if (o->checkpoint) t.checkpoint = std::string(o->checkpoint);
        auto run = enumerate_theta(t);
        Json j{{"ledger", run.ledger},
               {"shard", {{"index", t.shard_index}, {"count", t.shard_count}}},
               {"range", {{"begin", subset_id_hex(run.range_begin)}, {"end", subset_id_hex(run.range_end)}}},
               {"cap", t.cap},
               {"budget", t.budget},
               {"replayed", run.replayed}};
        if (o->emit_unknowns) {
            Json ids = Json::array();
            for (auto id : run.unknown_ids) ids.push_back(subset_id_hex(id));
            j["unknown_ids"] = std::move(ids);
        }
        *out_json = dup(dump(j));
    });
}

enkit_status enkit_check(const char* constants_json, char** out_json, int* out_passed) {
    return guarded([&] {
        require(out_json, "out_json");
        CheckOptions c;
        if (constants_json) {
            auto j = Json::parse(constants_json);
            if (!j.is_object()) throw Error(ErrorCode::Parse, "constants must be a JSON object");
            for (const auto& [key, value] : j.items()) {
                if (key == "b6") c.constants.b6 = value.get<BigInt>();
                else if (key == "b7") c.constants.b7 = value.get<BigInt>();
                else if (key == "b8") c.constants.b8 = value.get<BigInt>();
                else throw Error(ErrorCode::InvalidArgument, "unknown constant '" + key + "'");
            }
        }
        auto report = check_report(c);
        *out_json = dup(dump(report));
        if (out_passed) *out_passed = report["passed"].get<bool>() ? 1 : 0;
    });
}

}  // extern "C"

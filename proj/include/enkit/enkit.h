#ifndef ENKIT_H
#define ENKIT_H

/* C interface to the enkit core. Every call returns an enkit_status; on a
 * nonzero status enkit_last_error() describes the failure for the calling
 * thread. Strings returned through char** out-parameters are owned by the
 * caller and released with enkit_string_free. Results are JSON documents in
 * which every big integer is a decimal string. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ENKIT_API __declspec(dllexport)
#else
#define ENKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum enkit_status {
    ENKIT_OK = 0,
    ENKIT_E_INVALID_ARGUMENT = 1,
    ENKIT_E_PARSE = 2,
    ENKIT_E_INDEX_RANGE = 3,
    ENKIT_E_DEGREE = 4,
    ENKIT_E_VARIABLE_CAP = 5,
    ENKIT_E_MATERIALIZATION = 6,
    ENKIT_E_CHECKPOINT = 7,
    ENKIT_E_IO = 8,
    ENKIT_E_INTERNAL = 9
} enkit_status;

typedef struct enkit_polynomial enkit_polynomial;
typedef struct enkit_system enkit_system;

typedef enum enkit_compile_mode { ENKIT_MODE_OPTIMIZED = 0, ENKIT_MODE_LITERAL = 1 } enkit_compile_mode;

typedef enum enkit_witness_family { ENKIT_FAMILY_CHAIN = 0, ENKIT_FAMILY_FERMAT = 1, ENKIT_FAMILY_TN = 2 } enkit_witness_family;

ENKIT_API const char* enkit_version(void);
ENKIT_API const char* enkit_status_name(enkit_status status);
ENKIT_API const char* enkit_last_error(void);
ENKIT_API void enkit_string_free(char* s);

/* Polynomials: the equation grammar, e.g. "x1*x2 - 6 = 0" or "x1^2 - 2". */
ENKIT_API enkit_status enkit_polynomial_parse(const char* text, enkit_polynomial** out);
ENKIT_API enkit_status enkit_polynomial_render(const enkit_polynomial* p, char** out);
ENKIT_API void enkit_polynomial_free(enkit_polynomial* p);

/* Systems: the text format with an optional `vars N` header. */
ENKIT_API enkit_status enkit_system_parse(const char* text, enkit_system** out);
ENKIT_API enkit_status enkit_system_render(const enkit_system* s, char** out);
ENKIT_API enkit_status enkit_system_to_json(const enkit_system* s, char** out);
ENKIT_API size_t enkit_system_variables(const enkit_system* s);
ENKIT_API size_t enkit_system_equations(const enkit_system* s);
ENKIT_API void enkit_system_free(enkit_system* s);

/* Compilation. out_text receives the system text with the auxiliary map as
 * comments, out_json the system and map; either may be NULL. */
ENKIT_API enkit_status enkit_compile(const enkit_polynomial* p, enkit_compile_mode mode, char** out_text,
                                     char** out_json);

/* Verification of the projection and lift conditions on [1, box]^p; box is a
 * decimal string. */
ENKIT_API enkit_status enkit_verify_conditions(const enkit_polynomial* p, enkit_compile_mode mode, const char* box,
                                               char** out_json);

typedef struct enkit_solve_options {
    const char* bound; /* decimal string, required */
    int min_value;     /* 0 or 1 */
    uint64_t limit;    /* 0: no limit */
    uint64_t node_budget;
    unsigned threads;
} enkit_solve_options;

ENKIT_API void enkit_solve_options_init(enkit_solve_options* o);
ENKIT_API enkit_status enkit_solve(const enkit_system* s, const enkit_solve_options* o, char** out_json);

typedef struct enkit_decide_options {
    unsigned delta;
    const char* cap;          /* decimal string, NULL for the default */
    const char* assume_bound; /* decimal string or NULL */
    uint64_t node_budget;
    enkit_compile_mode mode;
} enkit_decide_options;

ENKIT_API void enkit_decide_options_init(enkit_decide_options* o);
ENKIT_API enkit_status enkit_decide(const enkit_polynomial* p, const enkit_decide_options* o, char** out_json);

typedef struct enkit_witness_options {
    enkit_witness_family family;
    size_t n;
    int verify;
    const char* phi_text; /* tn only: gadget in system text format, NULL for the identity gadget */
    uint64_t node_budget;
    uint64_t factor_budget;
} enkit_witness_options;

ENKIT_API void enkit_witness_options_init(enkit_witness_options* o);
/* *out_passed is 0 when a verification step failed. */
ENKIT_API enkit_status enkit_witness(const enkit_witness_options* o, char** out_text, char** out_json,
                                     int* out_passed);

typedef struct enkit_theta_options {
    size_t n;
    const char* cap; /* decimal string, NULL for the default */
    uint64_t budget;
    size_t shard_index;
    size_t shard_count;
    unsigned threads;
    const char* checkpoint; /* NULL: no checkpoint */
    int emit_unknowns;      /* include the ids of UNKNOWN subsets */
} enkit_theta_options;

ENKIT_API void enkit_theta_options_init(enkit_theta_options* o);
ENKIT_API enkit_status enkit_theta(const enkit_theta_options* o, char** out_json);

/* Identity suite; *out_passed is 0 when any identity fails. constants_json
 * may replace the expected constants, e.g. {"b7": "50627"}; NULL keeps them. */
ENKIT_API enkit_status enkit_check(const char* constants_json, char** out_json, int* out_passed);

#ifdef __cplusplus
}
#endif

#endif

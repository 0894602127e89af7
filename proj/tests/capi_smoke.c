/* Compiles the public header as C and drives one call of each kind. */

#include "enkit/enkit.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

static void expect(int cond, const char* what) {
    if (!cond) {
        fprintf(stderr, "FAIL %s (%s)\n", what, enkit_last_error());
        ++failures;
    }
}

int main(void) {
    enkit_polynomial* p = NULL;
    enkit_system* s = NULL;
    enkit_solve_options so;
    char* json = NULL;

    expect(enkit_polynomial_parse("x1 - 2 = 0", &p) == ENKIT_OK, "parse polynomial");
    expect(enkit_polynomial_parse("x1 +* 2", &p) == ENKIT_E_PARSE, "reject bad polynomial");
    expect(strlen(enkit_last_error()) > 0, "error message set");

    expect(enkit_system_parse("x1 * x1 = x2\n", &s) == ENKIT_OK, "parse system");
    enkit_solve_options_init(&so);
    so.bound = "4";
    expect(enkit_solve(s, &so, &json) == ENKIT_OK, "solve");
    expect(json != NULL && strstr(json, "\"solution_count\": 2") != NULL, "two solutions");
    enkit_string_free(json);

    enkit_system_free(s);
    enkit_polynomial_free(p);
    if (failures == 0) printf("capi smoke ok, version %s\n", enkit_version());
    return failures == 0 ? 0 : 1;
}

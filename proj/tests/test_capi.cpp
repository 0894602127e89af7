// Exercises the shared library through enkit.h only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "enkit/enkit.h"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <string>
#include <thread>

using Json = nlohmann::json;

namespace {

// Takes ownership of a returned string.
Json take_json(char* s) {
    REQUIRE(s != nullptr);
    auto j = Json::parse(s);
    enkit_string_free(s);
    return j;
}

enkit_polynomial* poly(const char* text) {
    enkit_polynomial* p = nullptr;
    REQUIRE(enkit_polynomial_parse(text, &p) == ENKIT_OK);
    return p;
}

}  // namespace

TEST_CASE("status names and version") {
    CHECK(std::string(enkit_status_name(ENKIT_OK)) == "ok");
    CHECK(std::string(enkit_status_name(ENKIT_E_CHECKPOINT)) == "checkpoint");
    CHECK(std::string(enkit_version()).size() > 0);
    enkit_string_free(nullptr);
}

TEST_CASE("errors map to status codes") {
    enkit_polynomial* p = nullptr;
    CHECK(enkit_polynomial_parse(nullptr, &p) == ENKIT_E_INVALID_ARGUMENT);
    CHECK(enkit_polynomial_parse("x0 + 1", &p) == ENKIT_E_PARSE);
    CHECK(p == nullptr);

    // x1 does not occur, so compilation refuses it.
    auto* gap = poly("x2 - 1");
    char* text = nullptr;
    CHECK(enkit_compile(gap, ENKIT_MODE_OPTIMIZED, &text, nullptr) == ENKIT_E_DEGREE);
    CHECK(text == nullptr);
    enkit_polynomial_free(gap);

    enkit_system* s = nullptr;
    CHECK(enkit_system_parse("x1 * x2 = \n", &s) == ENKIT_E_PARSE);
    CHECK(std::string(enkit_last_error()).size() > 0);

    enkit_theta_options o;
    enkit_theta_options_init(&o);
    o.n = 4;
    char* out = nullptr;
    CHECK(enkit_theta(&o, &out) == ENKIT_E_INVALID_ARGUMENT);
    CHECK(out == nullptr);

    enkit_decide_options d;
    enkit_decide_options_init(&d);
    d.cap = "ten";
    auto* q = poly("x1 - 2");
    CHECK(enkit_decide(q, &d, &out) == ENKIT_E_PARSE);
    enkit_polynomial_free(q);
}

TEST_CASE("last error is per thread") {
    enkit_polynomial* p = nullptr;
    REQUIRE(enkit_polynomial_parse("x1 +", &p) != ENKIT_OK);
    std::string main_error = enkit_last_error();
    std::string other;
    std::thread t([&] { other = enkit_last_error(); });
    t.join();
    CHECK(other.empty());
    CHECK(std::string(enkit_last_error()) == main_error);
}

TEST_CASE("systems render and report sizes") {
    enkit_system* s = nullptr;
    REQUIRE(enkit_system_parse("vars 3\nx1 * x2 = x3\nx3 + 1 = x1\n", &s) == ENKIT_OK);
    CHECK(enkit_system_variables(s) == 3);
    CHECK(enkit_system_equations(s) == 2);
    char* text = nullptr;
    REQUIRE(enkit_system_render(s, &text) == ENKIT_OK);
    CHECK(std::string(text).find("x1 * x2 = x3") != std::string::npos);
    enkit_string_free(text);
    char* json = nullptr;
    REQUIRE(enkit_system_to_json(s, &json) == ENKIT_OK);
    CHECK(take_json(json)["n"] == 3);
    enkit_system_free(s);
}

TEST_CASE("compile and verify conditions") {
    auto* p = poly("x1*x2 - 6 = 0");
    char* text = nullptr;
    char* json = nullptr;
    REQUIRE(enkit_compile(p, ENKIT_MODE_LITERAL, &text, &json) == ENKIT_OK);
    CHECK(std::string(text).find("vars ") != std::string::npos);
    enkit_string_free(text);
    auto j = take_json(json);
    CHECK(j["map"]["mode"] == "literal");
    CHECK(j["map"]["p"] == 2);

    REQUIRE(enkit_compile(p, ENKIT_MODE_OPTIMIZED, nullptr, &json) == ENKIT_OK);
    CHECK(take_json(json)["map"]["mode"] == "optimized");

    REQUIRE(enkit_verify_conditions(p, ENKIT_MODE_OPTIMIZED, "6", &json) == ENKIT_OK);
    auto rep = take_json(json);
    CHECK(rep["ok"] == true);
    CHECK(rep["roots"].size() == 4);
    enkit_polynomial_free(p);
}

TEST_CASE("solve returns decimal strings") {
    enkit_system* s = nullptr;
    REQUIRE(enkit_system_parse("x1 * x1 = x2\nx2 * x2 = x3\n", &s) == ENKIT_OK);
    enkit_solve_options o;
    enkit_solve_options_init(&o);
    o.bound = "100";
    char* json = nullptr;
    REQUIRE(enkit_solve(s, &o, &json) == ENKIT_OK);
    auto j = take_json(json);
    CHECK(j["exhausted"] == true);
    CHECK(j["solution_count"] == 3);
    CHECK(j["solutions"][2]["values"] == Json::array({"3", "9", "81"}));

    o.limit = 1;
    REQUIRE(enkit_solve(s, &o, &json) == ENKIT_OK);
    CHECK(take_json(json)["status"] == "limit_reached");

    o.bound = nullptr;
    CHECK(enkit_solve(s, &o, &json) == ENKIT_E_INVALID_ARGUMENT);
    enkit_system_free(s);
}

TEST_CASE("decide through the C interface") {
    enkit_decide_options o;
    enkit_decide_options_init(&o);
    char* json = nullptr;

    auto* yes = poly("x1 - 2 = 0");
    REQUIRE(enkit_decide(yes, &o, &json) == ENKIT_OK);
    auto j = take_json(json);
    CHECK(j["outcome"] == "YES");
    CHECK(j["root"] == Json::array({"2"}));

    auto* no = poly("x1*x1 - 2 = 0");
    o.assume_bound = "100";
    REQUIRE(enkit_decide(no, &o, &json) == ENKIT_OK);
    j = take_json(json);
    CHECK(j["outcome"] == "NO");
    CHECK(j["flags"]["override_bound"] == true);

    o.node_budget = 10;
    auto* two = poly("x1*x2 - 2*x2 - 3*x1 + 7 = 0");
    REQUIRE(enkit_decide(two, &o, &json) == ENKIT_OK);
    CHECK(take_json(json)["outcome"] != "NO");

    enkit_polynomial_free(yes);
    enkit_polynomial_free(no);
    enkit_polynomial_free(two);
}

TEST_CASE("witness reports") {
    enkit_witness_options o;
    enkit_witness_options_init(&o);
    o.family = ENKIT_FAMILY_FERMAT;
    o.n = 1;
    o.verify = 1;
    char* text = nullptr;
    char* json = nullptr;
    int passed = 0;
    REQUIRE(enkit_witness(&o, &text, &json, &passed) == ENKIT_OK);
    CHECK(passed == 1);
    CHECK(std::string(text).rfind("vars 6", 0) == 0);
    enkit_string_free(text);
    auto j = take_json(json);
    CHECK(j["verification"][0]["detail"]["solution"]["values"] == Json::array({"3", "9", "4", "5", "10", "2"}));

    o.family = ENKIT_FAMILY_TN;
    o.n = 9;
    o.phi_text = "# tn: x1=1 x2=2\nvars 3\nx3 * x3 = x3\nx3 * x1 = x2\n";
    REQUIRE(enkit_witness(&o, nullptr, &json, &passed) == ENKIT_OK);
    CHECK(passed == 1);
    CHECK(take_json(json)["system"]["n"] == 9);

    o.phi_text = "# tn: x1=1 x2=9\nvars 3\nx3 * x3 = x3\n";
    CHECK(enkit_witness(&o, nullptr, &json, &passed) == ENKIT_E_INDEX_RANGE);

    o.family = ENKIT_FAMILY_CHAIN;
    o.phi_text = nullptr;
    o.n = 2;
    CHECK(enkit_witness(&o, nullptr, &json, &passed) == ENKIT_E_INVALID_ARGUMENT);
}

TEST_CASE("theta with checkpoint and unknown list") {
    auto path = (std::filesystem::temp_directory_path() / "enkit_capi_theta.ckpt").string();
    std::filesystem::remove(path);
    enkit_theta_options o;
    enkit_theta_options_init(&o);
    o.n = 2;
    o.checkpoint = path.c_str();
    o.emit_unknowns = 1;
    char* json = nullptr;
    REQUIRE(enkit_theta(&o, &json) == ENKIT_OK);
    auto first = take_json(json);
    CHECK(first["ledger"]["exact"] == true);
    CHECK(first["ledger"]["theta_lower"] == "2");
    CHECK(first["unknown_ids"].empty());

    REQUIRE(enkit_theta(&o, &json) == ENKIT_OK);
    auto second = take_json(json);
    CHECK(second["ledger"] == first["ledger"]);
    CHECK(second["replayed"].get<int>() > 0);

    o.cap = "128";
    CHECK(enkit_theta(&o, &json) == ENKIT_E_CHECKPOINT);
    std::filesystem::remove(path);
}

TEST_CASE("identity suite and tampering") {
    char* json = nullptr;
    int passed = 0;
    REQUIRE(enkit_check(nullptr, &json, &passed) == ENKIT_OK);
    CHECK(passed == 1);
    CHECK(take_json(json)["passed"] == true);

    REQUIRE(enkit_check(R"({"b7": "50627"})", &json, &passed) == ENKIT_OK);
    CHECK(passed == 0);
    auto j = take_json(json);
    bool named = false;
    for (const auto& c : j["checks"])
        if (c["passed"] == false) named = named || c["name"].get<std::string>().find("B(7)") != std::string::npos;
    CHECK(named);

    CHECK(enkit_check(R"({"b9": "1"})", &json, &passed) == ENKIT_E_INVALID_ARGUMENT);
    CHECK(enkit_check("[", &json, &passed) == ENKIT_E_PARSE);
}

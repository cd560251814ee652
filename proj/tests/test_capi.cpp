// Exercises the shared-library surface exactly as an external client would:
// only sonc/sonc.h, opaque handles, and status codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sonc/sonc.h>

#include <json.hpp>

#include <string>
#include <vector>

namespace {

struct Str {
    char* s = nullptr;
    ~Str() { sonc_string_free(s); }
    std::string get() const { return s == nullptr ? std::string() : std::string(s); }
};

const char* kMotzkin = "x1^4*x2^2 + x1^2*x2^4 - 3*x1^2*x2^2 + 1";

const char* kMotzkinCircuit = R"({
    "outer": [{"exp": [4, 2], "coef": "1"}, {"exp": [2, 4], "coef": "1"}, {"exp": [0, 0], "coef": "1"}],
    "inner": {"exp": [2, 2], "coef": "-3"}
})";

} // namespace

TEST_CASE("polynomial parse/format/eval round trip") {
    sonc_poly* p = nullptr;
    REQUIRE(sonc_poly_parse_text(kMotzkin, -1, &p) == SONC_OK);
    CHECK(sonc_poly_nvars(p) == 2);

    double value = 0.0;
    std::vector<double> point{2.0, 1.0};
    REQUIRE(sonc_poly_eval(p, point.data(), point.size(), &value) == SONC_OK);
    CHECK(value == doctest::Approx(9.0));

    Str text;
    REQUIRE(sonc_poly_format_text(p, &text.s) == SONC_OK);
    sonc_poly* reparsed = nullptr;
    REQUIRE(sonc_poly_parse_text(text.get().c_str(), -1, &reparsed) == SONC_OK);
    Str j1, j2;
    REQUIRE(sonc_poly_format_json(p, &j1.s) == SONC_OK);
    REQUIRE(sonc_poly_format_json(reparsed, &j2.s) == SONC_OK);
    CHECK(j1.get() == j2.get());

    sonc_poly* from_json = nullptr;
    REQUIRE(sonc_poly_parse_json(j1.get().c_str(), &from_json) == SONC_OK);
    CHECK(sonc_poly_nvars(from_json) == 2);

    sonc_poly_free(from_json);
    sonc_poly_free(reparsed);
    sonc_poly_free(p);
}

TEST_CASE("parse errors set status and message") {
    sonc_poly* p = nullptr;
    CHECK(sonc_poly_parse_text("x1 + + x2", -1, &p) == SONC_PARSE_ERROR);
    CHECK(std::string(sonc_last_error()).find("position") != std::string::npos);
    CHECK(sonc_poly_parse_text(nullptr, -1, &p) == SONC_INVALID_ARGUMENT);
}

TEST_CASE("check-circuit reports the boundary classification with exact theta") {
    Str report;
    REQUIRE(sonc_check_circuit(kMotzkinCircuit, nullptr, &report.s) == SONC_OK);
    auto j = nlohmann::json::parse(report.get());
    CHECK(j.at("classification") == "Boundary");
    CHECK(j.at("exact") == true);
    CHECK(j.at("theta").at("exact") == "3");
    CHECK(j.at("lambda") == nlohmann::json({"1/3", "1/3", "1/3"}));
    CHECK(j.at("comparison") == "Equal");
}

TEST_CASE("verify through the C API") {
    sonc_poly* p = nullptr;
    REQUIRE(sonc_poly_parse_text(kMotzkin, -1, &p) == SONC_OK);

    nlohmann::json cert = {{"type", "sonc"},
                           {"n", 2},
                           {"pieces", nlohmann::json::array({nlohmann::json::parse(kMotzkinCircuit)})},
                           {"squares", nlohmann::json::array()}};
    sonc_cert* c = nullptr;
    REQUIRE(sonc_cert_parse_json(cert.dump().c_str(), &c) == SONC_OK);
    CHECK(sonc_cert_is_symmetric(c) == 0);

    Str report;
    REQUIRE(sonc_verify(p, c, nullptr, &report.s) == SONC_OK);
    auto j = nlohmann::json::parse(report.get());
    CHECK(j.at("verdict") == "Verified");
    CHECK(j.at("checks_performed") == 1);

    sonc_cert_free(c);
    sonc_poly_free(p);
}

TEST_CASE("symmetric pipeline: symmetrize, decompose, verify, expand") {
    sonc_poly* f = nullptr;
    REQUIRE(sonc_poly_parse_text("1/2*x1^4 + 1/2*x2^4*x3^4 + 1/4*x2^4*x3^8 - x1*x2*x3 - x1*x2^2*x3^3 + 3/4",
                                 -1, &f) == SONC_OK);
    sonc_poly* fsym = nullptr;
    REQUIRE(sonc_poly_symmetrize(f, 0, &fsym) == SONC_OK);
    int symmetric = 0;
    REQUIRE(sonc_poly_is_symmetric(fsym, &symmetric) == SONC_OK);
    CHECK(symmetric == 1);

    sonc_cert* cert = nullptr;
    Str decompose_report;
    REQUIRE(sonc_decompose(fsym, R"({"symmetric": true})", &cert, &decompose_report.s) == SONC_OK);
    REQUIRE(cert != nullptr);
    CHECK(sonc_cert_is_symmetric(cert) == 1);

    Str verify_report;
    REQUIRE(sonc_verify_symmetric(fsym, cert, nullptr, &verify_report.s) == SONC_OK);
    CHECK(nlohmann::json::parse(verify_report.get()).at("verdict") == "Verified");

    sonc_cert* expanded = nullptr;
    REQUIRE(sonc_cert_expand(cert, &expanded) == SONC_OK);
    Str plain_report;
    REQUIRE(sonc_verify(fsym, expanded, nullptr, &plain_report.s) == SONC_OK);
    CHECK(nlohmann::json::parse(plain_report.get()).at("verdict") == "Verified");

    // Wrong entry point for the certificate kind.
    Str wrong;
    CHECK(sonc_verify(fsym, cert, nullptr, &wrong.s) == SONC_INVALID_ARGUMENT);

    sonc_cert_free(expanded);
    sonc_cert_free(cert);
    sonc_poly_free(fsym);
    sonc_poly_free(f);
}

TEST_CASE("verify_symmetric rejects non-symmetric input with NOT_SYMMETRIC") {
    sonc_poly* p = nullptr;
    REQUIRE(sonc_poly_parse_text("x1^4 + x2^2", -1, &p) == SONC_OK);
    nlohmann::json cert = {{"type", "symmetric-sonc"},
                           {"mode", "group"},
                           {"n", 2},
                           {"pieces", nlohmann::json::array()},
                           {"squares", nlohmann::json::array()}};
    sonc_cert* c = nullptr;
    REQUIRE(sonc_cert_parse_json(cert.dump().c_str(), &c) == SONC_OK);
    Str report;
    CHECK(sonc_verify_symmetric(p, c, nullptr, &report.s) == SONC_NOT_SYMMETRIC);
    sonc_cert_free(c);
    sonc_poly_free(p);
}

TEST_CASE("orbit endpoint") {
    Str report;
    std::vector<int> exponent{1, 4, 0};
    REQUIRE(sonc_orbit(exponent.data(), exponent.size(), &report.s) == SONC_OK);
    auto j = nlohmann::json::parse(report.get());
    CHECK(j.at("size") == 6);
    CHECK(j.at("representative") == nlohmann::json({4, 1, 0}));
    CHECK(j.at("elements").size() == 6);
}

TEST_CASE("muirhead endpoint: membership, decomposition, gaps") {
    Str report;
    nlohmann::json request = {{"alpha", {1, 4, 0}},
                              {"beta", {2, 3, 0}},
                              {"x", {{1.0, 1.0, 1.0}, {0.5, 2.0, 1.5}}},
                              {"samples", 50},
                              {"seed", 9}};
    REQUIRE(sonc_muirhead(request.dump().c_str(), &report.s) == SONC_OK);
    auto j = nlohmann::json::parse(report.get());
    CHECK(j.at("member") == true);
    REQUIRE(j.at("decomposition").size() == 2);
    CHECK(j.at("decomposition")[0].at("weight") == "2/3");
    CHECK(j.at("min_gap").get<double>() >= -1e-9);

    nlohmann::json outside = {{"alpha", {1, 4, 0}}, {"beta", {5, 0, 0}}};
    Str report2;
    REQUIRE(sonc_muirhead(outside.dump().c_str(), &report2.s) == SONC_OK);
    CHECK(nlohmann::json::parse(report2.get()).at("member") == false);
}

TEST_CASE("falsify and grid endpoints") {
    sonc_poly* p = nullptr;
    REQUIRE(sonc_poly_parse_text("x1^4*x2^2 + x1^2*x2^4 - 301/100*x1^2*x2^2 + 1", -1, &p) == SONC_OK);
    Str report;
    REQUIRE(sonc_falsify(p, R"({"samples": 5000, "seed": 1})", &report.s) == SONC_OK);
    auto j = nlohmann::json::parse(report.get());
    REQUIRE_FALSE(j.at("witness").is_null());
    CHECK(j.at("witness").at("exact_value").get<std::string>().front() == '-');
    sonc_poly_free(p);

    sonc_poly* motzkin = nullptr;
    REQUIRE(sonc_poly_parse_text(kMotzkin, -1, &motzkin) == SONC_OK);
    Str none;
    REQUIRE(sonc_falsify(motzkin, R"({"samples": 4000, "seed": 2})", &none.s) == SONC_OK);
    CHECK(nlohmann::json::parse(none.get()).at("witness").is_null());

    Str grid;
    REQUIRE(sonc_min_on_grid(motzkin, 2.0, 81, &grid.s) == SONC_OK);
    auto g = nlohmann::json::parse(grid.get());
    CHECK(g.at("value").get<double>() >= 0.0);
    CHECK(g.at("value").get<double>() <= 1e-3);
    sonc_poly_free(motzkin);
}

TEST_CASE("status names and version are stable strings") {
    CHECK(std::string(sonc_version()) == "1.0.0");
    CHECK(std::string(sonc_status_name(SONC_OK)) == "ok");
    CHECK(std::string(sonc_status_name(SONC_PARSE_ERROR)) == "parse error");
}

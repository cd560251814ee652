// Integration tests for the command-line front end. The binary path comes
// from the SONC_CLI environment variable (set by ctest); commands run through
// std::system with stdout captured to temp files.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
    const char* env = std::getenv("SONC_CLI");
    REQUIRE_MESSAGE(env != nullptr, "SONC_CLI must point at the sonc binary");
    return env;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    static int counter = 0;
    fs::path out_path = fs::temp_directory_path() / ("sonc_cli_out_" + std::to_string(++counter) + ".txt");
    std::string command = cli_path() + " " + args + " > " + out_path.string() + " 2>/dev/null";
    int raw = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    result.out = buffer.str();
    fs::remove(out_path);
    return result;
}

fs::path write_temp(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

const char* kMotzkin = "x1^4*x2^2 + x1^2*x2^4 - 3*x1^2*x2^2 + 1";

} // namespace

TEST_CASE("check-circuit: boundary circuit exits 0 and prints exact theta") {
    fs::path circuit = write_temp("motzkin_circuit.json", R"({
        "outer": [{"exp": [4,2], "coef": "1"}, {"exp": [2,4], "coef": "1"}, {"exp": [0,0], "coef": "1"}],
        "inner": {"exp": [2,2], "coef": "-3"}})");
    RunResult human = run("check-circuit " + circuit.string());
    CHECK(human.exit_code == 0);
    CHECK(human.out.find("Boundary") != std::string::npos);
    CHECK(human.out.find("3 (exact)") != std::string::npos);

    RunResult json = run("--json check-circuit " + circuit.string());
    CHECK(json.exit_code == 0);
    auto j = nlohmann::json::parse(json.out);
    CHECK(j.at("classification") == "Boundary");
    CHECK(j.at("theta").at("exact") == "3");
    fs::remove(circuit);
}

TEST_CASE("check-circuit: infeasible inner coefficient exits 1") {
    fs::path circuit = write_temp("hot_circuit.json", R"({
        "outer": [{"exp": [4,2], "coef": "1"}, {"exp": [2,4], "coef": "1"}, {"exp": [0,0], "coef": "1"}],
        "inner": {"exp": [2,2], "coef": "-301/100"}})");
    RunResult r = run("check-circuit " + circuit.string());
    CHECK(r.exit_code == 1);
    fs::remove(circuit);
}

TEST_CASE("verify-cert exits 0 on Verified and 1 otherwise") {
    fs::path poly = write_temp("motzkin.txt", kMotzkin);
    fs::path cert = write_temp("motzkin_cert.json", R"({
        "type": "sonc", "n": 2,
        "pieces": [{
            "outer": [{"exp": [4,2], "coef": "1"}, {"exp": [2,4], "coef": "1"}, {"exp": [0,0], "coef": "1"}],
            "inner": {"exp": [2,2], "coef": "-3"}}],
        "squares": []})");
    CHECK(run("verify-cert " + poly.string() + " " + cert.string()).exit_code == 0);

    fs::path wrong = write_temp("motzkin_wrong.txt", "x1^4*x2^2 + x1^2*x2^4 - 3*x1^2*x2^2 + 2");
    CHECK(run("verify-cert " + wrong.string() + " " + cert.string()).exit_code == 1);
    fs::remove(poly);
    fs::remove(wrong);
    fs::remove(cert);
}

TEST_CASE("decompose: Motzkin certifies, the -10 variant is unknown then refuted") {
    fs::path poly = write_temp("motzkin2.txt", kMotzkin);
    RunResult found = run("--json decompose " + poly.string());
    CHECK(found.exit_code == 0);
    auto cert = nlohmann::json::parse(found.out);
    CHECK(cert.at("type") == "sonc");
    CHECK(cert.at("pieces").size() == 1);
    fs::remove(poly);

    fs::path hot = write_temp("hot.txt", "x1^4 + x2^4 - 10*x1^2*x2^2");
    CHECK(run("decompose " + hot.string()).exit_code == 2);
    CHECK(run("--seed 7 decompose --falsify " + hot.string()).exit_code == 1);
    fs::remove(hot);
}

TEST_CASE("decompose --symmetric writes a certificate that verify-sym-cert accepts") {
    fs::path poly = write_temp("deg14.txt",
                               "20/7*x1^14 + 20/7*x2^14 + 20/7*x3^14"
                               " - 2*x1^4*x2^2*x3^2 - 2*x1^2*x2^4*x3^2 - 2*x1^2*x2^2*x3^4"
                               " - 6*x1^4*x2^4*x3^4 + 24/7");
    fs::path cert = fs::temp_directory_path() / "deg14_cert.json";
    RunResult r = run("decompose --symmetric --json-out " + cert.string() + " " + poly.string());
    CHECK(r.exit_code == 0);
    REQUIRE(fs::exists(cert));
    RunResult v = run("--json verify-sym-cert " + poly.string() + " " + cert.string());
    CHECK(v.exit_code == 0);
    auto j = nlohmann::json::parse(v.out);
    CHECK(j.at("verdict") == "Verified");
    CHECK(j.at("checks_performed") == 2);
    fs::remove(poly);
    fs::remove(cert);
}

TEST_CASE("symmetrize respects the mode flag") {
    fs::path poly = write_temp("const34.txt", "3/4");
    RunResult group = run("--json symmetrize --nvars 3 --mode group " + poly.string());
    CHECK(group.exit_code == 0);
    auto jg = nlohmann::json::parse(group.out);
    CHECK(jg.at("terms")[0].at("coef") == "9/2");
    RunResult orbit = run("--json symmetrize --nvars 3 --mode orbit " + poly.string());
    auto jo = nlohmann::json::parse(orbit.out);
    CHECK(jo.at("terms")[0].at("coef") == "3/4");
    fs::remove(poly);
}

TEST_CASE("orbit emits the documented JSON schema") {
    RunResult r = run("--json orbit 1,4,0");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("representative") == nlohmann::json({4, 1, 0}));
    CHECK(j.at("size") == 6);
    CHECK(j.at("elements").size() == 6);
}

TEST_CASE("muirhead command reports membership and decomposition") {
    RunResult member = run("--json muirhead --alpha 1,4,0 --beta 2,3,0 --x 1,1,1 --samples 20");
    CHECK(member.exit_code == 0);
    auto j = nlohmann::json::parse(member.out);
    CHECK(j.at("member") == true);
    CHECK(j.at("decomposition").size() == 2);
    CHECK(j.at("min_gap").get<double>() >= -1e-9);

    RunResult outside = run("--json muirhead --alpha 2,2,0 --beta 3,1,0");
    CHECK(outside.exit_code == 1);
}

TEST_CASE("falsify exit codes distinguish witness from none") {
    fs::path hot = write_temp("hot2.txt", "x1^4*x2^2 + x1^2*x2^4 - 301/100*x1^2*x2^2 + 1");
    CHECK(run("--seed 11 falsify --samples 5000 " + hot.string()).exit_code == 1);
    fs::remove(hot);

    fs::path motzkin = write_temp("motzkin3.txt", kMotzkin);
    CHECK(run("--seed 11 falsify --samples 3000 " + motzkin.string()).exit_code == 0);
    fs::remove(motzkin);
}

TEST_CASE("usage and parse errors use the reserved exit codes") {
    CHECK(run("no-such-command").exit_code == 64);
    fs::path bad = write_temp("bad.txt", "x1 + + x2");
    CHECK(run("decompose " + bad.string()).exit_code == 65);
    fs::remove(bad);
}

TEST_CASE("stdin input works with -") {
    fs::path poly = write_temp("pipe.txt", kMotzkin);
    RunResult r = run("decompose - < " + poly.string());
    CHECK(r.exit_code == 0);
    fs::remove(poly);
}

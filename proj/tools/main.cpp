// sonc command-line front end. Talks to the engine exclusively through the
// C API in sonc/sonc.h; JSON reports go to stdout under --json while human
// text goes to stderr (and to stdout otherwise).
//
// Exit codes: 0 verified/nonnegative/success, 1 refuted or invalid
// certificate, 2 unknown, 64 usage error, 65 parse error.

#include <sonc/sonc.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) { throw CliError{code, message}; }

int exit_for_status(sonc_status status) {
    switch (status) {
        case SONC_PARSE_ERROR: return kExitParse;
        case SONC_INVALID_ARGUMENT: return kExitUsage;
        default: return kExitRefuted;
    }
}

void check(sonc_status status) {
    if (status != SONC_OK) die(exit_for_status(status), sonc_last_error());
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) die(kExitUsage, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

struct PolyHandle {
    sonc_poly* p = nullptr;
    ~PolyHandle() { sonc_poly_free(p); }
};

struct CertHandle {
    sonc_cert* c = nullptr;
    ~CertHandle() { sonc_cert_free(c); }
};

struct StringOut {
    char* s = nullptr;
    ~StringOut() { sonc_string_free(s); }
    std::string str() const { return s == nullptr ? std::string() : std::string(s); }
};

void load_polynomial(const std::string& path, int declared_nvars, PolyHandle& out) {
    const std::string text = read_input(path);
    if (looks_like_json(text)) {
        check(sonc_poly_parse_json(text.c_str(), &out.p));
    } else {
        check(sonc_poly_parse_text(text.c_str(), declared_nvars, &out.p));
    }
}

void load_certificate(const std::string& path, CertHandle& out) {
    check(sonc_cert_parse_json(read_input(path).c_str(), &out.c));
}

std::vector<int> parse_exponent_arg(const std::string& arg) {
    std::vector<int> out;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            die(kExitUsage, "bad exponent entry '" + item + "'");
        }
    }
    if (out.empty()) die(kExitUsage, "empty exponent");
    return out;
}

struct GlobalFlags {
    bool json = false;
    int jobs = 0; // 0: library default
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    int max_iter = 400;
};

std::ostream& human(const GlobalFlags& flags) { return flags.json ? std::cerr : std::cout; }

void emit_json(const GlobalFlags& flags, const std::string& payload) {
    if (flags.json) std::cout << payload << "\n";
}

std::string options_json(const GlobalFlags& flags) {
    nlohmann::json j = {{"tolerance", flags.tolerance}};
    return j.dump();
}

// ---------------------------------------------------------------------------

int cmd_check_circuit(const GlobalFlags& flags, const std::string& path) {
    StringOut report;
    check(sonc_check_circuit(read_input(path).c_str(), options_json(flags).c_str(), &report.s));
    auto j = nlohmann::json::parse(report.str());
    const std::string cls = j.at("classification").get<std::string>();
    std::string theta = "n/a";
    if (!j.at("theta").at("exact").is_null()) {
        theta = j.at("theta").at("exact").get<std::string>() + " (exact)";
    } else {
        theta = "exp(" + std::to_string(j.at("theta").at("log").get<double>()) + ") (log-domain)";
    }
    human(flags) << "classification: " << cls << "\n"
                 << "theta: " << theta << "\n";
    emit_json(flags, report.str());
    return cls == "NotNonnegative" ? kExitRefuted : kExitVerified;
}

int cmd_verify(const GlobalFlags& flags, const std::string& poly_path, const std::string& cert_path,
               int nvars, bool symmetric) {
    PolyHandle poly;
    load_polynomial(poly_path, nvars, poly);
    CertHandle cert;
    load_certificate(cert_path, cert);

    StringOut report;
    if (symmetric) {
        check(sonc_verify_symmetric(poly.p, cert.c, options_json(flags).c_str(), &report.s));
    } else {
        check(sonc_verify(poly.p, cert.c, options_json(flags).c_str(), &report.s));
    }
    auto j = nlohmann::json::parse(report.str());
    const std::string verdict = j.at("verdict").get<std::string>();
    human(flags) << "verdict: " << verdict
                 << " (checks_performed: " << j.at("checks_performed").get<int>() << ")\n";
    emit_json(flags, report.str());
    return verdict == "Verified" ? kExitVerified : kExitRefuted;
}

int cmd_decompose(const GlobalFlags& flags, const std::string& poly_path, int nvars, bool symmetric,
                  const std::string& json_out, bool falsify_on_unknown, int samples, double radius) {
    PolyHandle poly;
    load_polynomial(poly_path, nvars, poly);

    nlohmann::json opts = {{"symmetric", symmetric},
                           {"max_iter", flags.max_iter},
                           {"tolerance", flags.tolerance}};
    sonc_cert* raw = nullptr;
    StringOut report;
    check(sonc_decompose(poly.p, opts.dump().c_str(), &raw, &report.s));
    CertHandle cert;
    cert.c = raw;

    if (cert.c != nullptr) {
        StringOut cert_json;
        check(sonc_cert_format_json(cert.c, &cert_json.s));
        if (!json_out.empty()) {
            std::ofstream out(json_out);
            if (!out) die(kExitUsage, "cannot write '" + json_out + "'");
            out << cert_json.str() << "\n";
        }
        human(flags) << "certificate found\n";
        emit_json(flags, cert_json.str());
        if (!flags.json && json_out.empty()) std::cout << cert_json.str() << "\n";
        return kExitVerified;
    }

    human(flags) << "unknown: no certificate found\n";
    if (falsify_on_unknown) {
        nlohmann::json cfg = {{"samples", samples}, {"box_radius", radius}, {"seed", flags.seed}};
        if (flags.jobs > 0) cfg["jobs"] = flags.jobs;
        StringOut falsify_report;
        check(sonc_falsify(poly.p, cfg.dump().c_str(), &falsify_report.s));
        auto j = nlohmann::json::parse(falsify_report.str());
        if (!j.at("witness").is_null()) {
            human(flags) << "refuted: witness with value " << j.at("witness").at("exact_value").get<std::string>()
                         << "\n";
            emit_json(flags, falsify_report.str());
            return kExitRefuted;
        }
        emit_json(flags, falsify_report.str());
    } else {
        emit_json(flags, report.str());
    }
    return kExitUnknown;
}

int cmd_symmetrize(const GlobalFlags& flags, const std::string& poly_path, int nvars, const std::string& mode) {
    PolyHandle poly;
    load_polynomial(poly_path, nvars, poly);
    sonc_poly* out = nullptr;
    check(sonc_poly_symmetrize(poly.p, mode == "orbit" ? 1 : 0, &out));
    PolyHandle sym;
    sym.p = out;
    StringOut text;
    check(sonc_poly_format_text(sym.p, &text.s));
    StringOut j;
    check(sonc_poly_format_json(sym.p, &j.s));
    human(flags) << text.str() << "\n";
    emit_json(flags, j.str());
    return kExitVerified;
}

int cmd_orbit(const GlobalFlags& flags, const std::string& exponent_arg) {
    std::vector<int> exponent = parse_exponent_arg(exponent_arg);
    StringOut report;
    check(sonc_orbit(exponent.data(), exponent.size(), &report.s));
    auto j = nlohmann::json::parse(report.str());
    human(flags) << "orbit size " << j.at("size").get<std::uint64_t>() << ", representative "
                 << j.at("representative").dump() << "\n";
    emit_json(flags, report.str());
    return kExitVerified;
}

int cmd_muirhead(const GlobalFlags& flags, const std::string& alpha_arg, const std::string& beta_arg,
                 const std::vector<double>& b, const std::vector<std::string>& points, int samples) {
    nlohmann::json req = {{"alpha", parse_exponent_arg(alpha_arg)},
                          {"beta", parse_exponent_arg(beta_arg)},
                          {"seed", flags.seed}};
    if (!b.empty()) req["b"] = b;
    if (!points.empty()) {
        nlohmann::json xs = nlohmann::json::array();
        for (const auto& point : points) {
            nlohmann::json x = nlohmann::json::array();
            std::stringstream ss(point);
            std::string item;
            while (std::getline(ss, item, ',')) x.push_back(std::stod(item));
            xs.push_back(x);
        }
        req["x"] = xs;
    }
    req["samples"] = samples;

    StringOut report;
    check(sonc_muirhead(req.dump().c_str(), &report.s));
    auto j = nlohmann::json::parse(report.str());
    const bool member = j.at("member").get<bool>();
    human(flags) << "member: " << (member ? "true" : "false") << "\n";
    if (member) {
        human(flags) << "decomposition terms: " << j.at("decomposition").size() << "\n";
        if (j.contains("min_gap")) human(flags) << "min gap: " << j.at("min_gap").get<double>() << "\n";
    }
    emit_json(flags, report.str());
    return member ? kExitVerified : kExitRefuted;
}

int cmd_falsify(const GlobalFlags& flags, const std::string& poly_path, int nvars, int samples, double radius,
                int refine, bool nonneg) {
    PolyHandle poly;
    load_polynomial(poly_path, nvars, poly);
    nlohmann::json cfg = {{"samples", samples},
                          {"box_radius", radius},
                          {"refine_steps", refine},
                          {"seed", flags.seed},
                          {"nonnegative_orthant", nonneg}};
    if (flags.jobs > 0) cfg["jobs"] = flags.jobs;
    StringOut report;
    check(sonc_falsify(poly.p, cfg.dump().c_str(), &report.s));
    auto j = nlohmann::json::parse(report.str());
    emit_json(flags, report.str());
    if (j.at("witness").is_null()) {
        human(flags) << "no witness found\n";
        return kExitVerified;
    }
    human(flags) << "witness found, exact value " << j.at("witness").at("exact_value").get<std::string>() << "\n";
    return kExitRefuted;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sonc: nonnegativity certificates via sums of nonnegative circuit polynomials"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_flag("--json", flags.json, "emit machine-readable JSON on stdout (human text moves to stderr)");
    app.add_option("--jobs", flags.jobs, "worker threads for sampling (default: library choice)");
    app.add_option("--seed", flags.seed, "seed for randomized operations");
    app.add_option("--tolerance", flags.tolerance, "log-domain comparison tolerance")->capture_default_str();
    app.add_option("--max-iter", flags.max_iter, "decomposition rebalancing iterations")->capture_default_str();

    std::string poly_path, cert_path, json_out, exponent_arg, alpha_arg, beta_arg, mode = "group";
    int nvars = -1, samples = 10000, refine = 60, muirhead_samples = 100;
    double radius = 2.0;
    bool symmetric = false, falsify_on_unknown = false, nonneg = false;
    std::vector<double> b_values;
    std::vector<std::string> x_points;

    auto add_poly_arg = [&](CLI::App* cmd) {
        cmd->add_option("poly", poly_path, "polynomial file (text or JSON), or - for stdin")->required();
        cmd->add_option("--nvars", nvars, "declared variable count (default: inferred)");
    };

    auto* check_circuit = app.add_subcommand("check-circuit", "classify a circuit polynomial");
    check_circuit->add_option("circuit", poly_path, "circuit JSON file, or - for stdin")->required();

    auto* verify_cert = app.add_subcommand("verify-cert", "verify a plain SONC certificate");
    add_poly_arg(verify_cert);
    verify_cert->add_option("cert", cert_path, "certificate JSON file")->required();

    auto* verify_sym = app.add_subcommand("verify-sym-cert", "verify a symmetric SONC certificate");
    add_poly_arg(verify_sym);
    verify_sym->add_option("cert", cert_path, "certificate JSON file")->required();

    auto* decompose = app.add_subcommand("decompose", "search for a SONC decomposition");
    add_poly_arg(decompose);
    decompose->add_flag("--symmetric", symmetric, "orbit-reduced search for symmetric inputs");
    decompose->add_option("--json-out", json_out, "write the certificate JSON to a file");
    decompose->add_flag("--falsify", falsify_on_unknown, "on unknown, look for a negativity witness");
    decompose->add_option("--samples", samples, "falsifier samples")->capture_default_str();
    decompose->add_option("--radius", radius, "falsifier box radius")->capture_default_str();

    auto* symmetrize = app.add_subcommand("symmetrize", "symmetrize a polynomial");
    add_poly_arg(symmetrize);
    symmetrize->add_option("--mode", mode, "group|orbit")->check(CLI::IsMember({"group", "orbit"}))
        ->capture_default_str();

    auto* orbit_cmd = app.add_subcommand("orbit", "enumerate the permutation orbit of an exponent");
    orbit_cmd->add_option("exponent", exponent_arg, "comma-separated entries, e.g. 1,4,0")->required();

    auto* muirhead = app.add_subcommand("muirhead", "Muirhead membership, decomposition, and gaps");
    muirhead->add_option("--alpha", alpha_arg, "majorizing exponent, comma-separated")->required();
    muirhead->add_option("--beta", beta_arg, "dominated exponent, comma-separated")->required();
    muirhead->add_option("--b", b_values, "weights for the generalized inequality");
    muirhead->add_option("--x", x_points, "evaluation points (comma-separated, repeatable)");
    muirhead->add_option("--samples", muirhead_samples, "random evaluation points")->capture_default_str();

    auto* falsify = app.add_subcommand("falsify", "search for a negativity witness");
    add_poly_arg(falsify);
    falsify->add_option("--samples", samples, "sample count")->capture_default_str();
    falsify->add_option("--radius", radius, "box radius")->capture_default_str();
    falsify->add_option("--refine", refine, "coordinate-descent rounds")->capture_default_str();
    falsify->add_flag("--nonneg", nonneg, "restrict to the nonnegative orthant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check_circuit->parsed()) return cmd_check_circuit(flags, poly_path);
        if (verify_cert->parsed()) return cmd_verify(flags, poly_path, cert_path, nvars, false);
        if (verify_sym->parsed()) return cmd_verify(flags, poly_path, cert_path, nvars, true);
        if (decompose->parsed())
            return cmd_decompose(flags, poly_path, nvars, symmetric, json_out, falsify_on_unknown, samples, radius);
        if (symmetrize->parsed()) return cmd_symmetrize(flags, poly_path, nvars, mode);
        if (orbit_cmd->parsed()) return cmd_orbit(flags, exponent_arg);
        if (muirhead->parsed())
            return cmd_muirhead(flags, alpha_arg, beta_arg, b_values, x_points, muirhead_samples);
        if (falsify->parsed()) return cmd_falsify(flags, poly_path, nvars, samples, radius, refine, nonneg);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRefuted;
    }
    return kExitUsage;
}

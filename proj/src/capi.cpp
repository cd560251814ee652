// C API implementation: thin translation between the opaque-handle surface
// and the C++ core. Exceptions are caught here and mapped to status codes;
// messages are kept in a thread-local slot for sonc_last_error().

#include "sonc/sonc.h"

#include "certificate.hpp"
#include "circuit.hpp"
#include "decompose.hpp"
#include "errors.hpp"
#include "muirhead.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "symmetry.hpp"

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

struct sonc_poly {
    sonc::SparsePolynomial value;
};

struct sonc_cert {
    std::variant<sonc::SoncCertificate, sonc::SymmetricSoncCertificate> value;
};

namespace {

thread_local std::string g_last_error;

sonc_status status_of(sonc::ErrorCode code) {
    using sonc::ErrorCode;
    switch (code) {
        case ErrorCode::ParseError:
            return SONC_PARSE_ERROR;
        case ErrorCode::DimensionMismatch:
            return SONC_DIMENSION_MISMATCH;
        case ErrorCode::NegativeExponent:
        case ErrorCode::InvalidArgument:
            return SONC_INVALID_ARGUMENT;
        case ErrorCode::InputNotSymmetric:
            return SONC_NOT_SYMMETRIC;
        case ErrorCode::DimensionTooLarge:
        case ErrorCode::BudgetExceeded:
            return SONC_UNSUPPORTED;
        case ErrorCode::Internal:
            return SONC_INTERNAL_ERROR;
        default:
            return SONC_DOMAIN_ERROR;
    }
}

template <typename Fn>
sonc_status guarded(Fn&& fn) {
    try {
        fn();
        return SONC_OK;
    } catch (const sonc::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const nlohmann::json::exception& e) {
        g_last_error = std::string("ParseError: ") + e.what();
        return SONC_PARSE_ERROR;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SONC_INTERNAL_ERROR;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

sonc::CompareOptions compare_options_from_json(const char* options_json) {
    sonc::CompareOptions opts;
    if (options_json == nullptr || *options_json == '\0') return opts;
    nlohmann::json j = nlohmann::json::parse(options_json);
    opts.max_lcm_denominator = j.value("max_lcm_denominator", opts.max_lcm_denominator);
    opts.log_tolerance = j.value("tolerance", opts.log_tolerance);
    return opts;
}

void require(bool cond, const char* what) {
    if (!cond) sonc::fail(sonc::ErrorCode::InvalidArgument, what);
}

} // namespace

extern "C" {

const char* sonc_version(void) { return "1.0.0"; }

const char* sonc_status_name(sonc_status status) {
    switch (status) {
        case SONC_OK: return "ok";
        case SONC_INVALID_ARGUMENT: return "invalid argument";
        case SONC_PARSE_ERROR: return "parse error";
        case SONC_DIMENSION_MISMATCH: return "dimension mismatch";
        case SONC_DOMAIN_ERROR: return "domain error";
        case SONC_NOT_SYMMETRIC: return "input not symmetric";
        case SONC_UNSUPPORTED: return "unsupported";
        case SONC_INTERNAL_ERROR: return "internal error";
    }
    return "?";
}

const char* sonc_last_error(void) { return g_last_error.c_str(); }

void sonc_string_free(char* s) { std::free(s); }

sonc_status sonc_poly_parse_text(const char* text, int declared_nvars, sonc_poly** out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        std::optional<int> declared;
        if (declared_nvars >= 0) declared = declared_nvars;
        *out = new sonc_poly{sonc::parse_polynomial(text, declared)};
    });
}

sonc_status sonc_poly_parse_json(const char* json, sonc_poly** out) {
    return guarded([&] {
        require(json != nullptr && out != nullptr, "null argument");
        *out = new sonc_poly{sonc::polynomial_from_json(nlohmann::json::parse(json))};
    });
}

sonc_status sonc_poly_format_text(const sonc_poly* p, char** out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null argument");
        *out = dup_string(sonc::format_polynomial(p->value));
    });
}

sonc_status sonc_poly_format_json(const sonc_poly* p, char** out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null argument");
        *out = dup_string(sonc::polynomial_to_json(p->value).dump());
    });
}

int sonc_poly_nvars(const sonc_poly* p) { return p == nullptr ? -1 : p->value.nvars(); }

sonc_status sonc_poly_eval(const sonc_poly* p, const double* point, size_t len, double* out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr && (point != nullptr || len == 0), "null argument");
        *out = sonc::evaluate(p->value, std::span<const double>(point, len));
    });
}

sonc_status sonc_poly_is_symmetric(const sonc_poly* p, int* out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null argument");
        *out = sonc::is_symmetric(p->value) ? 1 : 0;
    });
}

sonc_status sonc_poly_symmetrize(const sonc_poly* p, int mode, sonc_poly** out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null argument");
        require(mode == 0 || mode == 1, "mode must be 0 (group) or 1 (orbit)");
        *out = new sonc_poly{sonc::symmetrize(
            p->value, mode == 0 ? sonc::SymmetrizeMode::GroupSum : sonc::SymmetrizeMode::OrbitSum)};
    });
}

void sonc_poly_free(sonc_poly* p) { delete p; }

sonc_status sonc_cert_parse_json(const char* json, sonc_cert** out) {
    return guarded([&] {
        require(json != nullptr && out != nullptr, "null argument");
        nlohmann::json j = nlohmann::json::parse(json);
        if (sonc::certificate_json_is_symmetric(j)) {
            *out = new sonc_cert{sonc::symmetric_certificate_from_json(j)};
        } else {
            *out = new sonc_cert{sonc::certificate_from_json(j)};
        }
    });
}

sonc_status sonc_cert_format_json(const sonc_cert* cert, char** out) {
    return guarded([&] {
        require(cert != nullptr && out != nullptr, "null argument");
        std::string dumped = std::visit([](const auto& c) { return sonc::certificate_to_json(c).dump(); }, cert->value);
        *out = dup_string(dumped);
    });
}

int sonc_cert_is_symmetric(const sonc_cert* cert) {
    return cert != nullptr && std::holds_alternative<sonc::SymmetricSoncCertificate>(cert->value) ? 1 : 0;
}

void sonc_cert_free(sonc_cert* cert) { delete cert; }

sonc_status sonc_cert_expand(const sonc_cert* cert, sonc_cert** out) {
    return guarded([&] {
        require(cert != nullptr && out != nullptr, "null argument");
        const auto* sym = std::get_if<sonc::SymmetricSoncCertificate>(&cert->value);
        require(sym != nullptr, "expand requires a symmetric certificate");
        *out = new sonc_cert{sonc::expand(*sym)};
    });
}

sonc_status sonc_check_circuit(const char* circuit_json, const char* options_json, char** report_json) {
    return guarded([&] {
        require(circuit_json != nullptr && report_json != nullptr, "null argument");
        sonc::CompareOptions opts = compare_options_from_json(options_json);
        sonc::CircuitPolynomialData data = sonc::circuit_from_json(nlohmann::json::parse(circuit_json));
        sonc::Classification cls = sonc::classify(data, opts);

        nlohmann::json theta = {{"log", data.log_circuit_number}};
        if (auto exact = sonc::circuit_number_exact(data.outer_coeffs, data.lambda, opts.max_lcm_denominator)) {
            theta["exact"] = sonc::rational_to_string(*exact);
        } else {
            theta["exact"] = nullptr;
        }
        nlohmann::json lambda = nlohmann::json::array();
        for (const auto& exp : data.support.outer) {
            lambda.push_back(sonc::rational_to_string(data.lambda.lambda.at(exp)));
        }
        nlohmann::json report = {{"classification", sonc::nonnegativity_class_name(cls.tag)},
                                 {"exact", cls.exact},
                                 {"theta", theta},
                                 {"lambda", lambda}};
        if (sgn(data.inner_coeff) < 0) {
            sonc::ThetaComparison c =
                sonc::compare_theta(abs(data.inner_coeff), data.outer_coeffs, data.lambda, opts);
            report["comparison"] = sonc::cmp_name(c.cmp);
        }
        *report_json = dup_string(report.dump());
    });
}

sonc_status sonc_verify(const sonc_poly* p, const sonc_cert* cert, const char* options_json, char** report_json) {
    return guarded([&] {
        require(p != nullptr && cert != nullptr && report_json != nullptr, "null argument");
        const auto* plain = std::get_if<sonc::SoncCertificate>(&cert->value);
        require(plain != nullptr, "sonc_verify requires a plain certificate");
        sonc::VerificationReport report = sonc::verify(p->value, *plain, compare_options_from_json(options_json));
        *report_json = dup_string(sonc::report_to_json(report).dump());
    });
}

sonc_status sonc_verify_symmetric(const sonc_poly* p, const sonc_cert* cert, const char* options_json,
                                  char** report_json) {
    return guarded([&] {
        require(p != nullptr && cert != nullptr && report_json != nullptr, "null argument");
        const auto* sym = std::get_if<sonc::SymmetricSoncCertificate>(&cert->value);
        require(sym != nullptr, "sonc_verify_symmetric requires a symmetric certificate");
        sonc::VerificationReport report =
            sonc::verify_symmetric(p->value, *sym, compare_options_from_json(options_json));
        *report_json = dup_string(sonc::report_to_json(report).dump());
    });
}

sonc_status sonc_decompose(const sonc_poly* p, const char* options_json, sonc_cert** cert_out, char** report_json) {
    return guarded([&] {
        require(p != nullptr && cert_out != nullptr, "null argument");
        *cert_out = nullptr;
        bool symmetric = false;
        sonc::DecomposeOptions opts;
        if (options_json != nullptr && *options_json != '\0') {
            nlohmann::json j = nlohmann::json::parse(options_json);
            symmetric = j.value("symmetric", false);
            opts.max_iter = j.value("max_iter", opts.max_iter);
            opts.compare.max_lcm_denominator = j.value("max_lcm_denominator", opts.compare.max_lcm_denominator);
            opts.compare.log_tolerance = j.value("tolerance", opts.compare.log_tolerance);
        }

        nlohmann::json report;
        if (symmetric) {
            auto cert = sonc::decompose_symmetric(p->value, opts);
            if (cert) {
                *cert_out = new sonc_cert{*cert};
                report = {{"status", "certificate"}, {"pieces", cert->orbit_pieces.size()}};
            } else {
                report = {{"status", "unknown"}};
            }
        } else {
            auto cert = sonc::decompose(p->value, opts);
            if (cert) {
                *cert_out = new sonc_cert{*cert};
                report = {{"status", "certificate"}, {"pieces", cert->pieces.size()}};
            } else {
                report = {{"status", "unknown"}};
            }
        }
        if (report_json != nullptr) *report_json = dup_string(report.dump());
    });
}

sonc_status sonc_orbit(const int* exponent, size_t n, char** report_json) {
    return guarded([&] {
        require(report_json != nullptr && (exponent != nullptr || n == 0), "null argument");
        std::vector<int> entries(exponent, exponent + n);
        sonc::Orbit o = sonc::orbit(sonc::Exponent(entries));
        *report_json = dup_string(sonc::orbit_to_json(o).dump());
    });
}

sonc_status sonc_muirhead(const char* request_json, char** report_json) {
    return guarded([&] {
        require(request_json != nullptr && report_json != nullptr, "null argument");
        nlohmann::json req = nlohmann::json::parse(request_json);
        sonc::Exponent alpha = sonc::exponent_from_json(req.at("alpha"));
        sonc::Exponent beta = sonc::exponent_from_json(req.at("beta"));

        nlohmann::json report;
        const bool member = sonc::in_permutation_polytope(beta, alpha);
        report["member"] = member;
        if (!member) {
            *report_json = dup_string(report.dump());
            return;
        }

        sonc::CaratheodoryDecomposition decomp = sonc::caratheodory_decomposition(beta, alpha);
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [sigma, weight] : decomp.terms) {
            terms.push_back({{"permutation", sigma.one_based_image()},
                             {"image", sonc::exponent_to_json(sigma.apply(alpha))},
                             {"weight", sonc::rational_to_string(weight)}});
        }
        report["decomposition"] = terms;

        std::vector<double> b;
        const bool generalized = req.contains("b");
        if (generalized) {
            for (const auto& v : req.at("b")) b.push_back(v.get<double>());
        }

        std::vector<std::vector<double>> points;
        if (req.contains("x")) {
            for (const auto& pt : req.at("x")) points.push_back(pt.get<std::vector<double>>());
        }
        const int samples = req.value("samples", points.empty() ? 100 : 0);
        std::uint64_t state = req.value("seed", 0ULL) * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL;
        auto next01 = [&state]() {
            state ^= state << 13U; state ^= state >> 7U; state ^= state << 17U;
            return static_cast<double>(state >> 11U) * 0x1.0p-53;
        };
        for (int s = 0; s < samples; ++s) {
            std::vector<double> x(static_cast<std::size_t>(alpha.dim()));
            for (auto& xi : x) xi = 3.0 * next01();
            points.push_back(std::move(x));
        }

        double min_gap = std::numeric_limits<double>::infinity();
        for (const auto& x : points) {
            double gap = generalized
                             ? sonc::generalized_muirhead_gap(alpha, decomp, b, x)
                             : sonc::muirhead_gap(alpha, beta, x);
            min_gap = std::min(min_gap, gap);
        }
        report["gap_kind"] = generalized ? "generalized" : "classical";
        report["points_evaluated"] = points.size();
        if (!points.empty()) report["min_gap"] = min_gap;
        *report_json = dup_string(report.dump());
    });
}

sonc_status sonc_falsify(const sonc_poly* p, const char* config_json, char** report_json) {
    return guarded([&] {
        require(p != nullptr && report_json != nullptr, "null argument");
        sonc::FalsificationConfig cfg;
        if (config_json != nullptr && *config_json != '\0') {
            nlohmann::json j = nlohmann::json::parse(config_json);
            cfg.samples = j.value("samples", cfg.samples);
            cfg.box_radius = j.value("box_radius", cfg.box_radius);
            cfg.refine_steps = j.value("refine_steps", cfg.refine_steps);
            cfg.seed = j.value("seed", cfg.seed);
            cfg.nonnegative_orthant = j.value("nonnegative_orthant", cfg.nonnegative_orthant);
            cfg.jobs = j.value("jobs", cfg.jobs);
        }
        auto witness = sonc::falsify(p->value, cfg);
        nlohmann::json report;
        if (!witness) {
            report["witness"] = nullptr;
            report["samples"] = cfg.samples;
        } else {
            nlohmann::json point = nlohmann::json::array();
            for (double x : witness->point) point.push_back(x);
            nlohmann::json rational_point = nlohmann::json::array();
            for (const auto& q : witness->rational_point) rational_point.push_back(sonc::rational_to_string(q));
            report["witness"] = {{"point", point},
                                 {"value", witness->value},
                                 {"rational_point", rational_point},
                                 {"exact_value", sonc::rational_to_string(witness->exact_value)}};
        }
        *report_json = dup_string(report.dump());
    });
}

sonc_status sonc_min_on_grid(const sonc_poly* p, double radius, int steps_per_axis, char** report_json) {
    return guarded([&] {
        require(p != nullptr && report_json != nullptr, "null argument");
        sonc::GridResult result = sonc::min_on_grid(p->value, radius, steps_per_axis);
        nlohmann::json point = nlohmann::json::array();
        for (double x : result.point) point.push_back(x);
        nlohmann::json report = {{"point", point}, {"value", result.value}};
        *report_json = dup_string(report.dump());
    });
}

} // extern "C"

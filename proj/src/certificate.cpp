#include "certificate.hpp"

#include "errors.hpp"

#include <algorithm>

namespace sonc {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Verified: return "Verified";
        case Verdict::SumMismatch: return "SumMismatch";
        case Verdict::PieceNotNonnegative: return "PieceNotNonnegative";
        case Verdict::InvalidPiece: return "InvalidPiece";
    }
    return "?";
}

namespace {

void validate_square(const MonomialSquare& s, int nvars) {
    if (s.exp.dim() != nvars) fail(ErrorCode::DimensionMismatch, "square exponent dimension");
    if (!s.exp.all_even()) fail(ErrorCode::InvalidArgument, "monomial square exponent must be all even");
    if (sgn(s.coef) <= 0) fail(ErrorCode::InvalidArgument, "monomial square coefficient must be positive");
}

SparsePolynomial squares_polynomial(const std::vector<MonomialSquare>& squares, int nvars) {
    std::vector<PolyTerm> terms;
    terms.reserve(squares.size());
    for (const auto& s : squares) terms.push_back({s.exp, s.coef});
    return SparsePolynomial::from_terms(nvars, terms);
}

} // namespace

SparsePolynomial certificate_sum(const SoncCertificate& cert) {
    SparsePolynomial acc(cert.nvars);
    for (const auto& piece : cert.pieces) {
        acc = combine(acc, circuit_to_polynomial(piece, cert.nvars), Rational(1), Rational(1));
    }
    return combine(acc, squares_polynomial(cert.squares, cert.nvars), Rational(1), Rational(1));
}

VerificationReport verify(const SparsePolynomial& p, const SoncCertificate& cert, const CompareOptions& opts) {
    VerificationReport report;
    bool invalid = false;
    for (std::size_t i = 0; i < cert.pieces.size(); ++i) {
        const auto& piece = cert.pieces[i];
        if (piece.support.inner.dim() != p.nvars() || cert.nvars != p.nvars()) {
            invalid = true;
            report.failing_pieces.push_back(i);
            report.per_piece.push_back({NonnegativityClass::NotNonnegative, true});
            continue;
        }
        Classification c = classify(piece, opts);
        if (sgn(piece.inner_coeff) < 0) ++report.checks_performed;
        if (!c.exact) report.exact = false;
        if (!is_nonnegative_class(c.tag)) report.failing_pieces.push_back(i);
        report.per_piece.push_back(c);
    }
    for (const auto& s : cert.squares) validate_square(s, cert.nvars);

    report.residual = combine(p, certificate_sum(cert), Rational(1), Rational(-1));
    report.sum_matches = report.residual.is_zero();

    if (invalid) report.verdict = Verdict::InvalidPiece;
    else if (!report.failing_pieces.empty()) report.verdict = Verdict::PieceNotNonnegative;
    else if (!report.sum_matches) report.verdict = Verdict::SumMismatch;
    else report.verdict = Verdict::Verified;
    return report;
}

namespace {

// Canonical key of a circuit piece: the full term data. Two transformed
// pieces with the same key are the same polynomial.
struct PieceKey {
    std::vector<std::pair<std::vector<int>, Rational>> outer;
    std::vector<int> inner;
    Rational inner_coeff;

    auto tie() const { return std::tie(outer, inner, inner_coeff); }
    bool operator<(const PieceKey& other) const { return tie() < other.tie(); }
};

PieceKey key_of(const CircuitPolynomialData& piece) {
    PieceKey key;
    for (const auto& [exp, coef] : piece.outer_coeffs) key.outer.emplace_back(exp.entries(), coef);
    key.inner = piece.support.inner.entries();
    key.inner_coeff = piece.inner_coeff;
    return key;
}

} // namespace

SoncCertificate expand(const SymmetricSoncCertificate& sym) {
    SoncCertificate out;
    out.nvars = sym.nvars;
    const auto perms = all_permutations(sym.nvars);

    if (sym.mode == SymmetrizeMode::GroupSum) {
        for (const auto& sigma : perms) {
            for (const auto& piece : sym.orbit_pieces) out.pieces.push_back(transform_circuit(piece, sigma));
        }
    } else {
        // One piece per distinct image class, scaled by the class size so the
        // expansion sums to the same polynomial as the group expansion.
        for (const auto& piece : sym.orbit_pieces) {
            std::map<PieceKey, std::pair<CircuitPolynomialData, unsigned>> classes;
            for (const auto& sigma : perms) {
                CircuitPolynomialData image = transform_circuit(piece, sigma);
                auto [it, inserted] = classes.emplace(key_of(image), std::make_pair(image, 0U));
                ++it->second.second;
            }
            for (auto& [key, entry] : classes) {
                out.pieces.push_back(scale_circuit(entry.first, Rational(entry.second)));
            }
        }
    }

    // Squares expand to their symmetrized polynomial either way.
    std::map<Exponent, Rational, GradedLexLess> merged;
    for (const auto& s : sym.squares) {
        Orbit orb = orbit(s.exp);
        Rational per_element = s.coef * Rational(Integer(static_cast<unsigned long>(factorial_u64(sym.nvars) / orb.size)));
        for (const auto& e : orb.elements) merged[e] += per_element;
    }
    for (auto& [exp, coef] : merged) {
        coef.canonicalize();
        if (sgn(coef) != 0) out.squares.push_back({exp, coef});
    }
    return out;
}

VerificationReport verify_symmetric(const SparsePolynomial& p, const SymmetricSoncCertificate& sym,
                                    const CompareOptions& opts) {
    if (!is_symmetric(p)) fail(ErrorCode::InputNotSymmetric, "verify_symmetric requires a symmetric polynomial");

    VerificationReport report;
    bool invalid = sym.nvars != p.nvars();
    for (std::size_t i = 0; i < sym.orbit_pieces.size(); ++i) {
        const auto& piece = sym.orbit_pieces[i];
        if (piece.support.inner.dim() != p.nvars()) {
            invalid = true;
            report.failing_pieces.push_back(i);
            report.per_piece.push_back({NonnegativityClass::NotNonnegative, true});
            continue;
        }
        if (sgn(piece.inner_coeff) > 0) {
            // Violates the orbit-certificate shape (inner coefficients <= 0).
            invalid = true;
            report.failing_pieces.push_back(i);
            report.per_piece.push_back({NonnegativityClass::InnerNonnegative, true});
            continue;
        }
        Classification c = classify(piece, opts);
        if (sgn(piece.inner_coeff) < 0) ++report.checks_performed;
        if (!c.exact) report.exact = false;
        if (!is_nonnegative_class(c.tag)) report.failing_pieces.push_back(i);
        report.per_piece.push_back(c);
    }

    // Exact sum check against the group expansion, computed per orbit piece
    // without materializing all n! transformed pieces.
    SparsePolynomial acc(p.nvars());
    for (const auto& piece : sym.orbit_pieces) {
        acc = combine(acc, symmetrize(circuit_to_polynomial(piece, p.nvars()), SymmetrizeMode::GroupSum),
                      Rational(1), Rational(1));
    }
    for (const auto& s : sym.squares) {
        validate_square(s, p.nvars());
        SparsePolynomial sq = SparsePolynomial::from_terms(p.nvars(), {{s.exp, s.coef}});
        acc = combine(acc, symmetrize(sq, SymmetrizeMode::GroupSum), Rational(1), Rational(1));
    }
    report.residual = combine(p, acc, Rational(1), Rational(-1));
    report.sum_matches = report.residual.is_zero();

    if (invalid) report.verdict = Verdict::InvalidPiece;
    else if (!report.failing_pieces.empty()) report.verdict = Verdict::PieceNotNonnegative;
    else if (!report.sum_matches) report.verdict = Verdict::SumMismatch;
    else report.verdict = Verdict::Verified;
    return report;
}

namespace {

nlohmann::json squares_to_json(const std::vector<MonomialSquare>& squares) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : squares) {
        out.push_back({{"exp", exponent_to_json(s.exp)}, {"coef", rational_to_string(s.coef)}});
    }
    return out;
}

std::vector<MonomialSquare> squares_from_json(const nlohmann::json& j) {
    std::vector<MonomialSquare> out;
    for (const auto& s : j) {
        out.push_back({exponent_from_json(s.at("exp")), rational_from_string(s.at("coef").get<std::string>())});
    }
    return out;
}

} // namespace

nlohmann::json certificate_to_json(const SoncCertificate& cert) {
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& piece : cert.pieces) pieces.push_back(circuit_to_json(piece));
    return {{"type", "sonc"}, {"n", cert.nvars}, {"pieces", pieces}, {"squares", squares_to_json(cert.squares)}};
}

nlohmann::json certificate_to_json(const SymmetricSoncCertificate& cert) {
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& piece : cert.orbit_pieces) pieces.push_back(circuit_to_json(piece));
    return {{"type", "symmetric-sonc"},
            {"mode", cert.mode == SymmetrizeMode::GroupSum ? "group" : "orbit"},
            {"n", cert.nvars},
            {"pieces", pieces},
            {"squares", squares_to_json(cert.squares)}};
}

bool certificate_json_is_symmetric(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("type")) fail(ErrorCode::ParseError, "certificate JSON must have 'type'");
    const std::string type = j.at("type").get<std::string>();
    if (type == "sonc") return false;
    if (type == "symmetric-sonc") return true;
    fail(ErrorCode::ParseError, "unknown certificate type '" + type + "'");
}

SoncCertificate certificate_from_json(const nlohmann::json& j) {
    if (certificate_json_is_symmetric(j)) fail(ErrorCode::ParseError, "expected a plain 'sonc' certificate");
    SoncCertificate cert;
    cert.nvars = j.at("n").get<int>();
    for (const auto& piece : j.at("pieces")) cert.pieces.push_back(circuit_from_json(piece));
    if (j.contains("squares")) cert.squares = squares_from_json(j.at("squares"));
    for (const auto& s : cert.squares) validate_square(s, cert.nvars);
    return cert;
}

SymmetricSoncCertificate symmetric_certificate_from_json(const nlohmann::json& j) {
    if (!certificate_json_is_symmetric(j)) fail(ErrorCode::ParseError, "expected a 'symmetric-sonc' certificate");
    SymmetricSoncCertificate cert;
    cert.nvars = j.at("n").get<int>();
    const std::string mode = j.value("mode", "group");
    if (mode == "group") cert.mode = SymmetrizeMode::GroupSum;
    else if (mode == "orbit") cert.mode = SymmetrizeMode::OrbitSum;
    else fail(ErrorCode::ParseError, "unknown mode '" + mode + "'");
    for (const auto& piece : j.at("pieces")) {
        CircuitPolynomialData data = circuit_from_json(piece);
        if (sgn(data.inner_coeff) > 0)
            fail(ErrorCode::PositiveInnerCoefficient, "symmetric certificates require nonpositive inner coefficients");
        cert.orbit_pieces.push_back(std::move(data));
    }
    if (j.contains("squares")) cert.squares = squares_from_json(j.at("squares"));
    for (const auto& s : cert.squares) validate_square(s, cert.nvars);
    return cert;
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json per_piece = nlohmann::json::array();
    for (const auto& c : report.per_piece) {
        per_piece.push_back({{"class", nonnegativity_class_name(c.tag)}, {"exact", c.exact}});
    }
    return {{"verdict", verdict_name(report.verdict)},
            {"sum_matches", report.sum_matches},
            {"exact", report.exact},
            {"residual", polynomial_to_json(report.residual)},
            {"per_piece", per_piece},
            {"failing_pieces", report.failing_pieces},
            {"checks_performed", report.checks_performed}};
}

} // namespace sonc

#pragma once

// Certificate data model and exact verification for plain and symmetric SONC
// decompositions. Residuals are rational; a Verified verdict never rests on a
// floating comparison unless the exact comparator overflowed its bound, in
// which case the report carries exact == false.

#include "circuit.hpp"
#include "poly.hpp"
#include "symmetry.hpp"

#include <vector>

namespace sonc {

struct MonomialSquare {
    Exponent exp;  // all entries even
    Rational coef; // > 0
};

struct SoncCertificate {
    int nvars = 0;
    std::vector<CircuitPolynomialData> pieces;
    std::vector<MonomialSquare> squares;
};

// Orbit-level certificate: each piece stands for its sum over the symmetric
// group. GroupSum mode expands to one piece per permutation; OrbitSum mode to
// one piece per distinct permuted image, scaled by the image multiplicity
// (equal-support pieces combined). Both expansions have the same sum.
struct SymmetricSoncCertificate {
    int nvars = 0;
    std::vector<CircuitPolynomialData> orbit_pieces; // inner coefficients <= 0
    std::vector<MonomialSquare> squares;             // orbit representatives
    SymmetrizeMode mode = SymmetrizeMode::GroupSum;
};

enum class Verdict { Verified, SumMismatch, PieceNotNonnegative, InvalidPiece };
const char* verdict_name(Verdict v);

struct VerificationReport {
    Verdict verdict = Verdict::Verified;
    bool sum_matches = true;
    bool exact = true; // false when any piece verdict used the log-domain fallback
    SparsePolynomial residual;
    std::vector<Classification> per_piece;
    std::vector<std::size_t> failing_pieces;
    int checks_performed = 0; // circuit-number comparisons executed
};

SparsePolynomial certificate_sum(const SoncCertificate& cert);

VerificationReport verify(const SparsePolynomial& p, const SoncCertificate& cert,
                          const CompareOptions& opts = {});

SoncCertificate expand(const SymmetricSoncCertificate& sym);

// Circuit-number condition checked once per orbit piece; the sum check runs
// against the group expansion of the certificate. Throws
// Error(InputNotSymmetric) when p is not symmetric.
VerificationReport verify_symmetric(const SparsePolynomial& p, const SymmetricSoncCertificate& sym,
                                    const CompareOptions& opts = {});

// {"type": "sonc"|"symmetric-sonc", "mode": "group"|"orbit",
//  "n": int, "pieces": [circuit...], "squares": [{"exp": [...], "coef": "p/q"}]}
nlohmann::json certificate_to_json(const SoncCertificate& cert);
nlohmann::json certificate_to_json(const SymmetricSoncCertificate& cert);
SoncCertificate certificate_from_json(const nlohmann::json& j);
SymmetricSoncCertificate symmetric_certificate_from_json(const nlohmann::json& j);
bool certificate_json_is_symmetric(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& report);

} // namespace sonc

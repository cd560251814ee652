#pragma once

// Circuit polynomials: simplex supports with even vertices and one interior
// term. Nonnegativity of such a polynomial reduces to comparing the absolute
// inner coefficient against the circuit number
//   Theta = prod_alpha (c_alpha / lambda_alpha)^lambda_alpha,
// where lambda are the barycentric coordinates of the inner point.

#include "exponent.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "symmetry.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sonc {

struct CircuitSupport {
    std::vector<Exponent> outer; // distinct, sorted graded-lex ascending
    Exponent inner;
};

struct BarycentricCoords {
    // Keyed by outer point; every weight lies strictly in (0,1) and the
    // weights reproduce the inner point exactly.
    std::map<Exponent, Rational, GradedLexLess> lambda;
};

enum class CircuitDefect {
    None,
    DimensionMismatch,
    TooFewVertices,
    DuplicateVertex,
    OddVertex,
    NotASimplex,
    NotInterior,
};

struct CircuitCheck {
    bool ok;
    CircuitDefect defect;
    std::string detail;
};

// Exact barycentric coordinates of `inner` over `outer`; throws
// Error(NotASimplex) for affinely dependent outer sets and Error(NotInterior)
// when the solution is not strictly positive or the system is inconsistent.
BarycentricCoords barycentric_coordinates(const std::vector<Exponent>& outer, const Exponent& inner);

// Diagnostic variant: never throws, names the first failed condition.
CircuitCheck is_circuit_support(const std::vector<Exponent>& outer, const Exponent& inner);

struct CircuitPolynomialData {
    CircuitSupport support;
    std::map<Exponent, Rational, GradedLexLess> outer_coeffs; // all > 0
    Rational inner_coeff;
    BarycentricCoords lambda;
    double log_circuit_number = 0.0;
};

struct CircuitTerm {
    Exponent exp;
    Rational coef;
};

// Validates the support, computes lambda and log Theta.
CircuitPolynomialData make_circuit_polynomial(const std::vector<CircuitTerm>& outer, const CircuitTerm& inner);

// log Theta = sum_alpha lambda_alpha (ln c_alpha - ln lambda_alpha).
double circuit_number_log(const std::map<Exponent, Rational, GradedLexLess>& outer_coeffs,
                          const BarycentricCoords& lambda);

// Theta as an exact rational when the common-denominator power has an exact
// root (e.g. Theta = 3 for the Motzkin circuit); nullopt otherwise.
std::optional<Rational> circuit_number_exact(const std::map<Exponent, Rational, GradedLexLess>& outer_coeffs,
                                             const BarycentricCoords& lambda,
                                             unsigned long max_lcm_denominator = 64);

enum class Cmp { Less, Equal, Greater };
const char* cmp_name(Cmp c);

// Exact three-way comparison of |c_beta| against Theta. Both sides are raised
// to the power D = lcm of the lambda denominators, turning the comparison into
// one between big rationals. Returns nullopt when D exceeds the bound
// (the DenominatorOverflow case; callers fall back to the log domain).
std::optional<Cmp> compare_exact(const Rational& abs_inner,
                                 const std::map<Exponent, Rational, GradedLexLess>& outer_coeffs,
                                 const BarycentricCoords& lambda,
                                 unsigned long max_lcm_denominator = 64);

struct CompareOptions {
    unsigned long max_lcm_denominator = 64;
    double log_tolerance = 1e-9;
};

struct ThetaComparison {
    Cmp cmp;
    bool exact; // false: log-domain fallback; Equal then means "within tolerance"
};

ThetaComparison compare_theta(const Rational& abs_inner,
                              const std::map<Exponent, Rational, GradedLexLess>& outer_coeffs,
                              const BarycentricCoords& lambda,
                              const CompareOptions& opts = {});

enum class NonnegativityClass {
    MonomialSquareSum,
    InnerNonnegative,
    StrictlyInside,
    Boundary,
    NotNonnegative,
};

const char* nonnegativity_class_name(NonnegativityClass c);
bool is_nonnegative_class(NonnegativityClass c);

struct Classification {
    NonnegativityClass tag;
    bool exact; // Boundary with exact == false is a within-tolerance verdict
};

Classification classify(const CircuitPolynomialData& data, const CompareOptions& opts = {});

// The support-reduction transform: maps a circuit polynomial f onto a circuit
// g supported on permutations of alpha_tilde (duplicate images merged), with
// inner point at the barycenter of the chosen images and inner coefficient
// c_beta * (n+1) / Theta_f. Preserves the nonnegativity classification.
CircuitPolynomialData support_reduction(const CircuitPolynomialData& f,
                                        const Exponent& alpha_tilde,
                                        const std::vector<Permutation>& sigma_choice = {},
                                        const CompareOptions& opts = {});

// Default sigma choice: the n+1 lexicographically smallest permutations
// (cycled when n! < n+1).
std::vector<Permutation> default_sigma_choice(int n);

SparsePolynomial circuit_to_polynomial(const CircuitPolynomialData& data, int nvars);

CircuitPolynomialData transform_circuit(const CircuitPolynomialData& data, const Permutation& sigma);
CircuitPolynomialData scale_circuit(const CircuitPolynomialData& data, const Rational& factor);

// Circuit JSON:
// {"outer": [{"exp": [...], "coef": "p/q"}...], "inner": {"exp": [...], "coef": "p/q"},
//  "lambda": ["p/q", ...]}  -- lambda is emitted for inspection and, when
// present on load, cross-checked against the recomputed coordinates.
nlohmann::json circuit_to_json(const CircuitPolynomialData& data);
CircuitPolynomialData circuit_from_json(const nlohmann::json& j);

} // namespace sonc

#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
// Values are immutable after construction and always canonical: no zero
// coefficients are stored and all exponents share the ambient dimension.

#include "exponent.hpp"
#include "rational.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace sonc {

struct PolyTerm {
    Exponent exp;
    Rational coef;
};

class SparsePolynomial {
public:
    using TermMap = std::map<Exponent, Rational, GradedLexLess>;

    SparsePolynomial() = default; // zero polynomial in zero variables
    explicit SparsePolynomial(int nvars) : nvars_(nvars) {}

    // Merges duplicate exponents and drops zero coefficients.
    static SparsePolynomial from_terms(int nvars, const std::vector<PolyTerm>& terms);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rational coefficient(const Exponent& e) const;

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    int nvars_ = 0;
    TermMap terms_;
};

// Text grammar:
//   polynomial := term (('+'|'-') term)*
//   term       := [rational ('*')?] monomial?
//   monomial   := var('^'int)? ('*' var('^'int)?)*
//   rational   := int('/'posint)?
// Variables are named x1..xn; n is inferred from the highest index unless
// declared. Syntax errors report the offending position.
SparsePolynomial parse_polynomial(const std::string& text, std::optional<int> declared_nvars = std::nullopt);

// Graded-lexicographic display, highest terms first; parse(format(p)) == p.
std::string format_polynomial(const SparsePolynomial& p);

double evaluate(const SparsePolynomial& p, std::span<const double> point);
Rational evaluate_exact(const SparsePolynomial& p, const std::vector<Rational>& point);

// a*p + b*q in canonical form, exact arithmetic.
SparsePolynomial combine(const SparsePolynomial& p, const SparsePolynomial& q,
                         const Rational& a, const Rational& b);

struct SignedSupport {
    std::set<Exponent, GradedLexLess> a_plus;  // all-even exponent, positive coefficient
    std::set<Exponent, GradedLexLess> a_minus; // everything else in the support
};

SignedSupport signed_partition(const SparsePolynomial& p);

// JSON schema: {"n": int, "terms": [{"exp": [int...], "coef": "p/q"}]}
nlohmann::json polynomial_to_json(const SparsePolynomial& p);
SparsePolynomial polynomial_from_json(const nlohmann::json& j);

// Shared JSON helpers for exponents and coefficients.
nlohmann::json exponent_to_json(const Exponent& e);
Exponent exponent_from_json(const nlohmann::json& j);

} // namespace sonc

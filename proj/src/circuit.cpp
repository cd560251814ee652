#include "circuit.hpp"

#include "errors.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sonc {

namespace {

// Columns are the outer points extended by an all-ones row; the rhs is the
// inner point extended by 1. A unique solution is the barycentric vector.
linalg::SolveResult barycentric_solve(const std::vector<Exponent>& outer, const Exponent& inner) {
    const int n = inner.dim();
    const int k = static_cast<int>(outer.size());
    linalg::IntMatrix a(static_cast<std::size_t>(n + 1), std::vector<Integer>(static_cast<std::size_t>(k)));
    std::vector<Integer> b(static_cast<std::size_t>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = outer[static_cast<std::size_t>(j)][i];
        b[static_cast<std::size_t>(i)] = inner[i];
    }
    for (int j = 0; j < k; ++j) a[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] = 1;
    b[static_cast<std::size_t>(n)] = 1;
    return linalg::solve_fraction_free(std::move(a), std::move(b));
}

void check_outer_dims(const std::vector<Exponent>& outer, const Exponent& inner) {
    for (const auto& e : outer) {
        if (e.dim() != inner.dim()) fail(ErrorCode::DimensionMismatch, "outer and inner dimensions differ");
    }
}

} // namespace

BarycentricCoords barycentric_coordinates(const std::vector<Exponent>& outer, const Exponent& inner) {
    check_outer_dims(outer, inner);
    if (outer.empty()) fail(ErrorCode::NotASimplex, "empty outer set");
    if (static_cast<int>(outer.size()) > inner.dim() + 1)
        fail(ErrorCode::NotASimplex, "more than n+1 outer points cannot be affinely independent");
    {
        std::set<Exponent, GradedLexLess> distinct(outer.begin(), outer.end());
        if (distinct.size() != outer.size()) fail(ErrorCode::NotASimplex, "duplicate outer points");
    }

    auto solved = barycentric_solve(outer, inner);
    if (solved.status == linalg::SolveStatus::RankDeficient)
        fail(ErrorCode::NotASimplex, "outer points are affinely dependent");
    if (solved.status == linalg::SolveStatus::Inconsistent)
        fail(ErrorCode::NotInterior, "inner point is outside the affine hull of the outer points");

    BarycentricCoords coords;
    for (std::size_t j = 0; j < outer.size(); ++j) {
        const Rational& l = solved.solution[j];
        if (sgn(l) <= 0 || l >= 1)
            fail(ErrorCode::NotInterior, "inner point is not in the relative interior of the simplex");
        coords.lambda.emplace(outer[j], l);
    }
    return coords;
}

CircuitCheck is_circuit_support(const std::vector<Exponent>& outer, const Exponent& inner) {
    for (const auto& e : outer) {
        if (e.dim() != inner.dim())
            return {false, CircuitDefect::DimensionMismatch, "outer and inner dimensions differ"};
    }
    if (outer.size() < 2)
        return {false, CircuitDefect::TooFewVertices, "a circuit needs at least two outer vertices"};
    {
        std::set<Exponent, GradedLexLess> distinct(outer.begin(), outer.end());
        if (distinct.size() != outer.size())
            return {false, CircuitDefect::DuplicateVertex, "outer points are not distinct"};
    }
    for (const auto& e : outer) {
        if (!e.all_even())
            return {false, CircuitDefect::OddVertex, "outer vertex has an odd entry"};
    }
    if (static_cast<int>(outer.size()) > inner.dim() + 1)
        return {false, CircuitDefect::NotASimplex, "more than n+1 outer points"};

    auto solved = barycentric_solve(outer, inner);
    if (solved.status == linalg::SolveStatus::RankDeficient)
        return {false, CircuitDefect::NotASimplex, "outer points are affinely dependent"};
    if (solved.status == linalg::SolveStatus::Inconsistent)
        return {false, CircuitDefect::NotInterior, "inner point lies outside the affine hull"};
    for (const auto& l : solved.solution) {
        if (sgn(l) <= 0 || l >= 1)
            return {false, CircuitDefect::NotInterior, "inner point is not strictly interior"};
    }
    return {true, CircuitDefect::None, ""};
}

CircuitPolynomialData make_circuit_polynomial(const std::vector<CircuitTerm>& outer, const CircuitTerm& inner) {
    std::vector<Exponent> outer_exps;
    outer_exps.reserve(outer.size());
    for (const auto& t : outer) outer_exps.push_back(t.exp);

    CircuitCheck check = is_circuit_support(outer_exps, inner.exp);
    if (!check.ok) {
        switch (check.defect) {
            case CircuitDefect::DimensionMismatch: fail(ErrorCode::DimensionMismatch, check.detail);
            case CircuitDefect::OddVertex: fail(ErrorCode::OddVertex, check.detail);
            case CircuitDefect::NotInterior: fail(ErrorCode::NotInterior, check.detail);
            default: fail(ErrorCode::NotASimplex, check.detail);
        }
    }

    CircuitPolynomialData data;
    for (const auto& t : outer) {
        if (sgn(t.coef) <= 0)
            fail(ErrorCode::NonpositiveOuterCoefficient, "outer coefficients must be positive");
        data.outer_coeffs.emplace(t.exp, t.coef);
    }

    std::sort(outer_exps.begin(), outer_exps.end(), GradedLexLess{});
    data.support.outer = std::move(outer_exps);
    data.support.inner = inner.exp;
    data.inner_coeff = inner.coef;
    data.lambda = barycentric_coordinates(data.support.outer, data.support.inner);
    data.log_circuit_number = circuit_number_log(data.outer_coeffs, data.lambda);
    return data;
}

double circuit_number_log(const std::map<Exponent, Rational, GradedLexLess>& outer_coeffs,
                          const BarycentricCoords& lambda) {
    double acc = 0.0;
    for (const auto& [exp, l] : lambda.lambda) {
        auto it = outer_coeffs.find(exp);
        if (it == outer_coeffs.end()) fail(ErrorCode::InvalidArgument, "missing outer coefficient");
        if (sgn(it->second) <= 0)
            fail(ErrorCode::NonpositiveOuterCoefficient, "outer coefficients must be positive");
        acc += l.get_d() * (std::log(it->second.get_d()) - std::log(l.get_d()));
    }
    return acc;
}

namespace {

// D = lcm of the lambda denominators, with overflow guard against the bound.
std::optional<unsigned long> lambda_common_denominator(const BarycentricCoords& lambda,
                                                       unsigned long max_lcm_denominator) {
    Integer d(1);
    for (const auto& [exp, l] : lambda.lambda) {
        Integer den = l.get_den();
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
        if (d > static_cast<unsigned long>(max_lcm_denominator)) return std::nullopt;
    }
    return d.get_ui();
}

// Theta^D as an exact rational.
Rational theta_power(const std::map<Exponent, Rational, GradedLexLess>& outer_coeffs,
                     const BarycentricCoords& lambda, unsigned long d) {
    Rational acc(1);
    for (const auto& [exp, l] : lambda.lambda) {
        Rational p = Rational(l * static_cast<unsigned long>(d));
        p.canonicalize();
        if (p.get_den() != 1) fail(ErrorCode::Internal, "lambda numerators not integral at common denominator");
        unsigned long e = mpz_get_ui(p.get_num().get_mpz_t());
        Rational base = outer_coeffs.at(exp) / l;
        base.canonicalize();
        acc *= rational_pow(base, e);
    }
    acc.canonicalize();
    return acc;
}

} // namespace

std::optional<Rational> circuit_number_exact(const std::map<Exponent, Rational, GradedLexLess>& outer_coeffs,
                                             const BarycentricCoords& lambda,
                                             unsigned long max_lcm_denominator) {
    auto d = lambda_common_denominator(lambda, max_lcm_denominator);
    if (!d) return std::nullopt;
    return exact_root(theta_power(outer_coeffs, lambda, *d), *d);
}

const char* cmp_name(Cmp c) {
    switch (c) {
        case Cmp::Less: return "Less";
        case Cmp::Equal: return "Equal";
        case Cmp::Greater: return "Greater";
    }
    return "?";
}

std::optional<Cmp> compare_exact(const Rational& abs_inner,
                                 const std::map<Exponent, Rational, GradedLexLess>& outer_coeffs,
                                 const BarycentricCoords& lambda,
                                 unsigned long max_lcm_denominator) {
    if (sgn(abs_inner) < 0) fail(ErrorCode::InvalidArgument, "abs_inner must be nonnegative");
    for (const auto& [exp, c] : outer_coeffs) {
        if (sgn(c) <= 0) fail(ErrorCode::NonpositiveOuterCoefficient, "outer coefficients must be positive");
    }
    auto d = lambda_common_denominator(lambda, max_lcm_denominator);
    if (!d) return std::nullopt; // DenominatorOverflow: caller falls back to log domain

    Rational lhs = rational_pow(abs_inner, *d);
    Rational rhs = theta_power(outer_coeffs, lambda, *d);
    int c = cmp(lhs, rhs);
    return c < 0 ? Cmp::Less : (c > 0 ? Cmp::Greater : Cmp::Equal);
}

ThetaComparison compare_theta(const Rational& abs_inner,
                              const std::map<Exponent, Rational, GradedLexLess>& outer_coeffs,
                              const BarycentricCoords& lambda,
                              const CompareOptions& opts) {
    if (auto exact = compare_exact(abs_inner, outer_coeffs, lambda, opts.max_lcm_denominator)) {
        return {*exact, true};
    }
    const double log_theta = circuit_number_log(outer_coeffs, lambda);
    if (sgn(abs_inner) == 0) return {Cmp::Less, false};
    const double log_inner = std::log(abs_inner.get_d());
    const double diff = log_inner - log_theta;
    if (std::abs(diff) <= opts.log_tolerance) return {Cmp::Equal, false}; // within tolerance
    return {diff < 0 ? Cmp::Less : Cmp::Greater, false};
}

const char* nonnegativity_class_name(NonnegativityClass c) {
    switch (c) {
        case NonnegativityClass::MonomialSquareSum: return "MonomialSquareSum";
        case NonnegativityClass::InnerNonnegative: return "InnerNonnegative";
        case NonnegativityClass::StrictlyInside: return "StrictlyInside";
        case NonnegativityClass::Boundary: return "Boundary";
        case NonnegativityClass::NotNonnegative: return "NotNonnegative";
    }
    return "?";
}

bool is_nonnegative_class(NonnegativityClass c) {
    return c != NonnegativityClass::NotNonnegative;
}

Classification classify(const CircuitPolynomialData& data, const CompareOptions& opts) {
    if (sgn(data.inner_coeff) >= 0) {
        return {data.support.inner.all_even() ? NonnegativityClass::MonomialSquareSum
                                              : NonnegativityClass::InnerNonnegative,
                true};
    }
    Rational mag = abs(data.inner_coeff);
    ThetaComparison c = compare_theta(mag, data.outer_coeffs, data.lambda, opts);
    switch (c.cmp) {
        case Cmp::Less: return {NonnegativityClass::StrictlyInside, c.exact};
        case Cmp::Equal: return {NonnegativityClass::Boundary, c.exact};
        case Cmp::Greater: return {NonnegativityClass::NotNonnegative, c.exact};
    }
    fail(ErrorCode::Internal, "unreachable");
}

std::vector<Permutation> default_sigma_choice(int n) {
    auto perms = all_permutations(n);
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) out.push_back(perms[static_cast<std::size_t>(j) % perms.size()]);
    return out;
}

CircuitPolynomialData support_reduction(const CircuitPolynomialData& f,
                                        const Exponent& alpha_tilde,
                                        const std::vector<Permutation>& sigma_choice,
                                        const CompareOptions& opts) {
    const int n = f.support.inner.dim();
    if (alpha_tilde.dim() != n) fail(ErrorCode::DimensionMismatch, "alpha_tilde dimension");
    if (!alpha_tilde.all_even()) fail(ErrorCode::OddVertex, "alpha_tilde must have all-even entries");

    std::vector<Permutation> sigmas = sigma_choice.empty() ? default_sigma_choice(n) : sigma_choice;
    if (static_cast<int>(sigmas.size()) != n + 1)
        fail(ErrorCode::InvalidArgument, "sigma_choice must contain n+1 permutations");

    // Images of alpha_tilde, duplicates merged with added coefficients.
    std::map<Exponent, Rational, GradedLexLess> merged;
    std::vector<Rational> barycenter(static_cast<std::size_t>(n), Rational(0));
    for (const auto& sigma : sigmas) {
        Exponent image = sigma.apply(alpha_tilde);
        for (int i = 0; i < n; ++i) barycenter[static_cast<std::size_t>(i)] += Rational(image[i], n + 1);
        merged[image] += 1;
    }

    // beta_tilde = sum_j sigma_j(alpha_tilde)/(n+1) - sum_alpha lambda_alpha alpha + beta.
    // The subtracted sum reproduces beta exactly, so the correction cancels;
    // it is carried through regardless, matching the defining formula.
    std::vector<Rational> beta_tilde = barycenter;
    for (const auto& [exp, l] : f.lambda.lambda) {
        for (int i = 0; i < n; ++i) beta_tilde[static_cast<std::size_t>(i)] -= l * exp[i];
    }
    for (int i = 0; i < n; ++i) beta_tilde[static_cast<std::size_t>(i)] += f.support.inner[i];

    std::vector<int> beta_entries(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rational v = beta_tilde[static_cast<std::size_t>(i)];
        v.canonicalize();
        if (v.get_den() != 1)
            fail(ErrorCode::NonLatticeInnerPoint, "barycenter of the permuted images is not a lattice point");
        if (sgn(v) < 0) fail(ErrorCode::NonLatticeInnerPoint, "negative inner coordinate");
        beta_entries[static_cast<std::size_t>(i)] = static_cast<int>(v.get_num().get_si());
    }
    Exponent inner_exp(std::move(beta_entries));

    std::vector<CircuitTerm> outer;
    outer.reserve(merged.size());
    for (const auto& [exp, coef] : merged) outer.push_back({exp, coef});

    CircuitCheck check = is_circuit_support([&] {
        std::vector<Exponent> exps;
        for (const auto& t : outer) exps.push_back(t.exp);
        return exps;
    }(), inner_exp);
    if (!check.ok) fail(ErrorCode::DegenerateSupport, "merged images do not form a circuit: " + check.detail);

    // Inner coefficient c_beta * (n+1) / Theta_f, exact whenever Theta_f is.
    Rational scaled;
    if (auto theta = circuit_number_exact(f.outer_coeffs, f.lambda, opts.max_lcm_denominator)) {
        scaled = f.inner_coeff * Rational(n + 1) / *theta;
    } else {
        scaled = f.inner_coeff * Rational(n + 1) / rational_from_double(std::exp(f.log_circuit_number));
    }
    scaled.canonicalize();

    return make_circuit_polynomial(outer, {inner_exp, scaled});
}

SparsePolynomial circuit_to_polynomial(const CircuitPolynomialData& data, int nvars) {
    std::vector<PolyTerm> terms;
    for (const auto& [exp, coef] : data.outer_coeffs) terms.push_back({exp, coef});
    terms.push_back({data.support.inner, data.inner_coeff});
    return SparsePolynomial::from_terms(nvars, terms);
}

CircuitPolynomialData transform_circuit(const CircuitPolynomialData& data, const Permutation& sigma) {
    std::vector<CircuitTerm> outer;
    outer.reserve(data.outer_coeffs.size());
    for (const auto& [exp, coef] : data.outer_coeffs) outer.push_back({sigma.apply(exp), coef});
    return make_circuit_polynomial(outer, {sigma.apply(data.support.inner), data.inner_coeff});
}

CircuitPolynomialData scale_circuit(const CircuitPolynomialData& data, const Rational& factor) {
    if (sgn(factor) <= 0) fail(ErrorCode::InvalidArgument, "scale factor must be positive");
    std::vector<CircuitTerm> outer;
    outer.reserve(data.outer_coeffs.size());
    for (const auto& [exp, coef] : data.outer_coeffs) outer.push_back({exp, coef * factor});
    Rational inner = data.inner_coeff * factor;
    inner.canonicalize();
    return make_circuit_polynomial(outer, {data.support.inner, inner});
}

nlohmann::json circuit_to_json(const CircuitPolynomialData& data) {
    nlohmann::json outer = nlohmann::json::array();
    nlohmann::json lambda = nlohmann::json::array();
    for (const auto& exp : data.support.outer) {
        outer.push_back({{"exp", exponent_to_json(exp)}, {"coef", rational_to_string(data.outer_coeffs.at(exp))}});
        lambda.push_back(rational_to_string(data.lambda.lambda.at(exp)));
    }
    return {{"outer", outer},
            {"inner", {{"exp", exponent_to_json(data.support.inner)}, {"coef", rational_to_string(data.inner_coeff)}}},
            {"lambda", lambda}};
}

CircuitPolynomialData circuit_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("outer") || !j.contains("inner"))
        fail(ErrorCode::ParseError, "circuit JSON must have 'outer' and 'inner'");
    std::vector<CircuitTerm> outer;
    for (const auto& t : j.at("outer")) {
        outer.push_back({exponent_from_json(t.at("exp")), rational_from_string(t.at("coef").get<std::string>())});
    }
    CircuitTerm inner{exponent_from_json(j.at("inner").at("exp")),
                      rational_from_string(j.at("inner").at("coef").get<std::string>())};
    CircuitPolynomialData data = make_circuit_polynomial(outer, inner);

    // Serialized lambda is advisory only: recompute and cross-check, pairing
    // entries with the outer list order as given in the JSON.
    if (j.contains("lambda")) {
        const auto& lam = j.at("lambda");
        if (lam.size() != outer.size())
            fail(ErrorCode::LambdaMismatch, "serialized lambda length differs from outer support");
        for (std::size_t i = 0; i < outer.size(); ++i) {
            Rational claimed = rational_from_string(lam[i].get<std::string>());
            if (claimed != data.lambda.lambda.at(outer[i].exp))
                fail(ErrorCode::LambdaMismatch, "serialized lambda disagrees with recomputed coordinates");
        }
    }
    return data;
}

} // namespace sonc

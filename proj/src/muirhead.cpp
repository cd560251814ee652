#include "muirhead.hpp"

#include "errors.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sonc {

bool majorizes(const Exponent& alpha, const Exponent& beta) {
    if (alpha.dim() != beta.dim()) fail(ErrorCode::DimensionMismatch, "majorization of unequal lengths");
    Exponent a = alpha.sorted_desc();
    Exponent b = beta.sorted_desc();
    long pa = 0, pb = 0;
    for (int i = 0; i < a.dim(); ++i) {
        pa += a[i];
        pb += b[i];
        if (pb > pa) return false;
    }
    return pa == pb;
}

bool in_permutation_polytope(const Exponent& beta, const Exponent& alpha) {
    return majorizes(alpha, beta);
}

namespace {

// Lexicographically smallest sigma with sigma(alpha) == element: slot i takes
// the smallest unused source index carrying the required value.
Permutation matching_permutation(const Exponent& alpha, const Exponent& element) {
    const int n = alpha.dim();
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int pick = -1;
        for (int j = 0; j < n; ++j) {
            if (!used[static_cast<std::size_t>(j)] && alpha[j] == element[i]) { pick = j; break; }
        }
        if (pick < 0) fail(ErrorCode::Internal, "element is not a permutation of alpha");
        used[static_cast<std::size_t>(pick)] = true;
        image[static_cast<std::size_t>(i)] = pick + 1;
    }
    return Permutation::from_one_based(image);
}

} // namespace

CaratheodoryDecomposition caratheodory_decomposition(const Exponent& beta, const Exponent& alpha) {
    if (!in_permutation_polytope(beta, alpha))
        fail(ErrorCode::NotInPolytope, "beta is not in the permutation polytope of alpha");
    const int n = alpha.dim();

    // Initial convex combination over the lexicographically ordered orbit,
    // found by the exact phase-1 walk (Bland's rule keeps it deterministic).
    Orbit orb = orbit(alpha);
    std::vector<std::vector<Rational>> cols;
    cols.reserve(orb.elements.size());
    for (const auto& v : orb.elements) {
        std::vector<Rational> col;
        col.reserve(static_cast<std::size_t>(n + 1));
        for (int i = 0; i < n; ++i) col.emplace_back(v[i]);
        col.emplace_back(1);
        cols.push_back(std::move(col));
    }
    std::vector<Rational> rhs;
    rhs.reserve(static_cast<std::size_t>(n + 1));
    for (int i = 0; i < n; ++i) rhs.emplace_back(beta[i]);
    rhs.emplace_back(1);

    auto weights = linalg::nonneg_solve(cols, rhs);
    if (!weights) fail(ErrorCode::Internal, "membership test and exact feasibility disagree");

    struct Node {
        Exponent point;
        Rational weight;
    };
    std::vector<Node> support;
    for (std::size_t j = 0; j < orb.elements.size(); ++j) {
        if (sgn((*weights)[j]) > 0) support.push_back({orb.elements[j], (*weights)[j]});
    }

    // Caratheodory reduction: while the support is affinely dependent, move
    // along a dependence direction until some weight vanishes.
    while (true) {
        linalg::IntMatrix m(static_cast<std::size_t>(n + 1), std::vector<Integer>(support.size()));
        for (std::size_t j = 0; j < support.size(); ++j) {
            for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][j] = support[j].point[i];
            m[static_cast<std::size_t>(n)][j] = 1;
        }
        auto dependence = linalg::nullspace_vector(std::move(m));
        if (!dependence) break;
        auto& mu = *dependence;
        if (std::all_of(mu.begin(), mu.end(), [](const Rational& v) { return sgn(v) <= 0; })) {
            for (auto& v : mu) v = -v;
        }
        Rational step;
        std::size_t drop = support.size();
        for (std::size_t j = 0; j < support.size(); ++j) {
            if (sgn(mu[j]) <= 0) continue;
            Rational ratio = support[j].weight / mu[j];
            ratio.canonicalize();
            if (drop == support.size() || ratio < step) {
                step = ratio;
                drop = j;
            }
        }
        std::vector<Node> next;
        next.reserve(support.size() - 1);
        for (std::size_t j = 0; j < support.size(); ++j) {
            Rational w = support[j].weight - step * mu[j];
            w.canonicalize();
            if (sgn(w) < 0) fail(ErrorCode::Internal, "negative weight during reduction");
            if (sgn(w) > 0) next.push_back({support[j].point, w});
        }
        support = std::move(next);
    }

    CaratheodoryDecomposition out;
    out.alpha = alpha;
    out.beta = beta;
    for (const auto& node : support) {
        out.terms.emplace_back(matching_permutation(alpha, node.point), node.weight);
    }

    // Reconstruction is an internal invariant; check it eagerly.
    std::vector<Rational> acc(static_cast<std::size_t>(n), Rational(0));
    Rational total(0);
    for (const auto& [sigma, w] : out.terms) {
        Exponent img = sigma.apply(alpha);
        for (int i = 0; i < n; ++i) acc[static_cast<std::size_t>(i)] += w * img[i];
        total += w;
    }
    if (total != 1) fail(ErrorCode::Internal, "decomposition weights do not sum to one");
    for (int i = 0; i < n; ++i) {
        if (acc[static_cast<std::size_t>(i)] != beta[i])
            fail(ErrorCode::Internal, "decomposition does not reconstruct beta");
    }
    if (out.terms.size() > static_cast<std::size_t>(n + 1))
        fail(ErrorCode::Internal, "reduction left more than n+1 terms");
    return out;
}

namespace {

double ipow(double base, int e) {
    double out = 1.0;
    double b = base;
    unsigned n = static_cast<unsigned>(e);
    while (n > 0) {
        if (n & 1U) out *= b;
        b *= b;
        n >>= 1U;
    }
    return out;
}

// sum over the full symmetric group of x^{sigma(gamma)}, evaluated over
// distinct orbit monomials weighted by the stabilizer multiplicity.
double group_orbit_sum(const Exponent& gamma, std::span<const double> x) {
    Orbit orb = orbit(gamma);
    const double multiplicity =
        static_cast<double>(factorial_u64(gamma.dim()) / orb.size);
    double acc = 0.0;
    for (const auto& element : orb.elements) {
        double mono = 1.0;
        for (int i = 0; i < element.dim(); ++i) {
            if (element[i] != 0) mono *= ipow(x[static_cast<std::size_t>(i)], element[i]);
        }
        acc += mono;
    }
    return multiplicity * acc;
}

// Shared evaluation path; the classical gap is the (1, 1) multiplier case.
double gap_core(const Exponent& alpha, const Exponent& beta, std::span<const double> x,
                double rhs_multiplier, double lhs_multiplier) {
    if (static_cast<int>(x.size()) != alpha.dim())
        fail(ErrorCode::DimensionMismatch, "evaluation point has wrong dimension");
    for (double xi : x) {
        if (xi < 0.0) fail(ErrorCode::InvalidArgument, "Muirhead gaps require nonnegative coordinates");
    }
    return rhs_multiplier * group_orbit_sum(alpha, x) - lhs_multiplier * group_orbit_sum(beta, x);
}

} // namespace

double muirhead_gap(const Exponent& alpha, const Exponent& beta, std::span<const double> x) {
    if (!in_permutation_polytope(beta, alpha))
        fail(ErrorCode::NotInPolytope, "beta is not in the permutation polytope of alpha");
    return gap_core(alpha, beta, x, 1.0, 1.0);
}

double generalized_muirhead_gap(const Exponent& alpha, const CaratheodoryDecomposition& decomp,
                                std::span<const double> b, std::span<const double> x) {
    const int n = alpha.dim();
    if (n < 3) fail(ErrorCode::InvalidArgument, "the generalized inequality requires n >= 3");
    if (!(alpha == decomp.alpha)) fail(ErrorCode::InvalidArgument, "decomposition was built for a different alpha");
    if (b.size() != decomp.terms.size())
        fail(ErrorCode::DimensionMismatch, "one b entry per decomposition term is required");
    for (double bj : b) {
        if (bj < 0.0) fail(ErrorCode::InvalidArgument, "b entries must be nonnegative");
    }

    // rhs multiplier sum_j b_j lambda_j is accumulated exactly so that the
    // all-ones case lands on 1.0 and shares the classical float path.
    Rational rhs_mult(0);
    double lhs_mult = 1.0;
    for (std::size_t j = 0; j < decomp.terms.size(); ++j) {
        const Rational& lam = decomp.terms[j].second;
        rhs_mult += rational_from_double(b[j]) * lam;
        lhs_mult *= std::pow(b[j], lam.get_d());
    }
    rhs_mult.canonicalize();
    return gap_core(alpha, decomp.beta, x, rhs_mult.get_d(), lhs_mult);
}

ConditionReport symmetric_condition_check(const std::vector<CircuitPolynomialData>& pieces,
                                          const CompareOptions& opts) {
    ConditionReport report{true, {}};
    for (const auto& piece : pieces) {
        if (sgn(piece.inner_coeff) > 0)
            fail(ErrorCode::PositiveInnerCoefficient, "the condition applies to nonpositive inner coefficients");
        ThetaComparison c = compare_theta(abs(piece.inner_coeff), piece.outer_coeffs, piece.lambda, opts);
        if (c.cmp == Cmp::Greater) report.satisfied = false;
        report.per_piece.push_back(c);
    }
    return report;
}

} // namespace sonc

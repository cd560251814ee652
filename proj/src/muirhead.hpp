#pragma once

// Classical and generalized Muirhead inequality machinery: majorization,
// permutation-polytope membership, Caratheodory decompositions over permuted
// vertices, and numeric inequality gaps.

#include "circuit.hpp"
#include "exponent.hpp"
#include "symmetry.hpp"

#include <span>
#include <utility>
#include <vector>

namespace sonc {

// True iff alpha and beta have equal coordinate sums and each prefix sum of
// beta sorted descending is bounded by the corresponding prefix of alpha.
bool majorizes(const Exponent& alpha, const Exponent& beta);

// Membership of beta in conv(orbit of alpha). By Rado's theorem this is the
// majorization test; the brute-force oracle validates the equivalence.
bool in_permutation_polytope(const Exponent& beta, const Exponent& alpha);

struct CaratheodoryDecomposition {
    Exponent alpha;
    Exponent beta;
    // At most n+1 entries; weights in (0,1] summing to 1 and reconstructing
    // beta exactly. Each permutation is the lexicographically smallest one
    // mapping alpha to its orbit element.
    std::vector<std::pair<Permutation, Rational>> terms;
};

// Deterministic construction: an exact feasibility walk over the
// lexicographically ordered orbit elements, followed by the standard
// Caratheodory reduction that removes affine dependencies.
CaratheodoryDecomposition caratheodory_decomposition(const Exponent& beta, const Exponent& alpha);

// sum_sigma x^sigma(alpha) - sum_sigma x^sigma(beta); nonnegative for
// x >= 0 whenever beta lies in the permutation polytope of alpha.
double muirhead_gap(const Exponent& alpha, const Exponent& beta, std::span<const double> x);

// RHS - LHS of the weighted inequality
//   sum_tau prod_j b_j^{lambda_j} x^{tau(beta)}
//     <= sum_tau sum_j b_j lambda_j x^{tau(alpha)}.
// b has one entry per decomposition term; all-ones b reduces to the classical
// gap along the identical floating-point path.
double generalized_muirhead_gap(const Exponent& alpha, const CaratheodoryDecomposition& decomp,
                                std::span<const double> b, std::span<const double> x);

struct ConditionReport {
    bool satisfied;
    std::vector<ThetaComparison> per_piece;
};

// The circuit-number condition |c_beta| <= Theta per piece, checked once per
// piece; valid only for nonpositive inner coefficients.
ConditionReport symmetric_condition_check(const std::vector<CircuitPolynomialData>& pieces,
                                          const CompareOptions& opts = {});

} // namespace sonc

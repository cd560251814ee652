#pragma once

// Search for SONC decompositions: circuit enumeration over a signed support,
// heuristic coefficient allocation across circuits, and the orbit-reduced
// symmetric variant. The search is sound but incomplete: every returned
// certificate has already passed exact re-verification, and failures are
// reported as "unknown" (std::nullopt).

#include "certificate.hpp"
#include "circuit.hpp"
#include "poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace sonc {

// All circuits C+ <= a_plus (sizes 2..n+1) carrying beta in the relative
// interior of conv(C+). Deterministic: subsets in lexicographic order over the
// sorted input.
std::vector<CircuitSupport> enumerate_circuits(const std::vector<Exponent>& a_plus, const Exponent& beta);

struct CircuitCatalog {
    std::map<Exponent, std::vector<CircuitSupport>, GradedLexLess> by_inner;
};

CircuitCatalog build_catalog(const std::vector<Exponent>& a_plus, const std::vector<Exponent>& inners);

struct DecomposeOptions {
    int max_iter = 400;        // rebalancing iterations
    double eta = 0.7;          // multiplicative step size
    double softmin_temp = 0.3; // demand weighting temperature
    CompareOptions compare;
    std::vector<unsigned long> snap_denominators = {2, 4, 8, 16, 64, 256, 4096, 1UL << 16, 1UL << 24};
};

std::optional<SoncCertificate> decompose(const SparsePolynomial& p, const DecomposeOptions& opts = {});

// Orbit-reduced search for symmetric inputs: one allocation problem per
// negative-orbit representative with orbit-multiplicity-scaled budgets,
// folded back into a GroupSum certificate. Throws Error(InputNotSymmetric)
// for non-symmetric inputs.
std::optional<SymmetricSoncCertificate> decompose_symmetric(const SparsePolynomial& p,
                                                            const DecomposeOptions& opts = {});

} // namespace sonc

#pragma once

// Independent brute-force and sampling checks used to validate the other
// modules' claims at desk scale. Nothing here shares a decision path with the
// fast implementations it corroborates.

#include "exponent.hpp"
#include "poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sonc {

struct FalsificationConfig {
    int samples = 10000;
    double box_radius = 2.0;
    int refine_steps = 60;
    std::uint64_t seed = 0;
    bool nonnegative_orthant = false; // restrict to x >= 0 (the Muirhead setting)
    int jobs = 1;
    double threshold = -1e-12; // float values above this are treated as noise
};

struct Witness {
    std::vector<double> point;
    double value;
    // The reported point re-evaluated in exact arithmetic; always negative.
    std::vector<Rational> rational_point;
    Rational exact_value;
};

// Seed-deterministic sampling (uniform and log-uniform scales) followed by
// coordinate descent around the best candidate. A witness is only reported
// after its value is confirmed negative in exact rational arithmetic.
std::optional<Witness> falsify(const SparsePolynomial& p, const FalsificationConfig& cfg = {});

// Reference implementation of permutation-polytope membership: exhaustive
// orbit vertices plus exact linear feasibility. Throws DimensionTooLarge for
// n > 6.
bool permutohedron_membership_bruteforce(const Exponent& beta, const Exponent& alpha);

struct GridResult {
    std::vector<double> point;
    double value;
};

// Exhaustive minimum over the uniform grid on [-radius, radius]^n.
// steps_per_axis^n must stay within `budget`.
GridResult min_on_grid(const SparsePolynomial& p, double radius, int steps_per_axis,
                       std::uint64_t budget = 20000000ULL);

} // namespace sonc

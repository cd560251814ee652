#pragma once

// Exact rational linear algebra used by the circuit and polytope machinery:
// fraction-free (Bareiss) elimination over integer matrices, nullspace
// extraction, and an exact phase-1 simplex for nonnegative feasibility.

#include "rational.hpp"

#include <optional>
#include <vector>

namespace sonc::linalg {

using IntMatrix = std::vector<std::vector<Integer>>;

enum class SolveStatus { Unique, Inconsistent, RankDeficient };

struct SolveResult {
    SolveStatus status;
    std::vector<Rational> solution; // populated only for Unique
};

// Exact solution of A x = b (A integer, m x k with m >= k) via fraction-free
// Gaussian elimination. RankDeficient reports linearly dependent columns.
SolveResult solve_fraction_free(IntMatrix a, std::vector<Integer> b);

// A nontrivial rational vector x with A x = 0, or nullopt when A has full
// column rank. Deterministic: the basis vector of the first free column.
std::optional<std::vector<Rational>> nullspace_vector(IntMatrix a);

// Exact feasibility of  sum_j w_j * cols[j] = rhs  with w >= 0.
// Returns a basic feasible solution (support <= #rows) found by a phase-1
// simplex with Bland's rule, or nullopt when infeasible.
std::optional<std::vector<Rational>> nonneg_solve(const std::vector<std::vector<Rational>>& cols,
                                                  const std::vector<Rational>& rhs);

} // namespace sonc::linalg

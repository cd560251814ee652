#include "decompose.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace sonc {

std::vector<CircuitSupport> enumerate_circuits(const std::vector<Exponent>& a_plus, const Exponent& beta) {
    const int n = beta.dim();
    std::vector<Exponent> candidates;
    for (const auto& e : a_plus) {
        if (e.dim() != n) fail(ErrorCode::DimensionMismatch, "support exponent dimension");
        if (e.all_even()) candidates.push_back(e);
    }
    std::sort(candidates.begin(), candidates.end(), GradedLexLess{});
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    const int count = static_cast<int>(candidates.size());
    const int max_size = std::min(n + 1, count);
    std::vector<CircuitSupport> out;

    std::vector<int> pick;
    auto try_subset = [&](const std::vector<int>& idx) {
        // Coordinatewise bounding-box pruning.
        for (int i = 0; i < n; ++i) {
            int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
            for (int j : idx) {
                lo = std::min(lo, candidates[static_cast<std::size_t>(j)][i]);
                hi = std::max(hi, candidates[static_cast<std::size_t>(j)][i]);
            }
            if (beta[i] < lo || beta[i] > hi) return;
        }
        std::vector<Exponent> subset;
        subset.reserve(idx.size());
        for (int j : idx) subset.push_back(candidates[static_cast<std::size_t>(j)]);
        CircuitCheck check = is_circuit_support(subset, beta);
        if (check.ok) out.push_back({std::move(subset), beta});
    };

    for (int size = 2; size <= max_size; ++size) {
        pick.assign(static_cast<std::size_t>(size), 0);
        for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
        if (size > count) break;
        while (true) {
            try_subset(pick);
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == count - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

CircuitCatalog build_catalog(const std::vector<Exponent>& a_plus, const std::vector<Exponent>& inners) {
    CircuitCatalog catalog;
    for (const auto& beta : inners) catalog.by_inner.emplace(beta, enumerate_circuits(a_plus, beta));
    return catalog;
}

namespace {

// ---------------------------------------------------------------------------
// Allocation: distribute positive budget mass across circuits so that every
// negative demand is covered within its circuit numbers. Budgets live in
// pools (concrete exponents for the plain search, orbit representatives for
// the symmetric one).
// ---------------------------------------------------------------------------

struct AllocCircuit {
    CircuitSupport support;
    BarycentricCoords lambda;
    std::vector<Exponent> pool_keys; // parallel to support.outer
};

struct AllocDemand {
    Exponent beta;
    Rational amount; // > 0
    std::vector<AllocCircuit> circuits;
};

struct AllocProblem {
    std::map<Exponent, Rational, GradedLexLess> budget; // pool key -> mass
    std::vector<AllocDemand> demands;
};

struct AllocPiece {
    std::size_t demand;
    std::size_t circuit;
    std::map<Exponent, Rational, GradedLexLess> weights; // concrete outer exponent -> coefficient
    Rational amount;                                     // covered demand (> 0)
};

struct AllocSolution {
    std::vector<AllocPiece> pieces;
    std::map<Exponent, Rational, GradedLexLess> leftover; // pool key -> remaining mass
};

struct VarRef {
    std::size_t demand;
    std::size_t circuit;
    std::size_t vertex; // index into circuit outer
};

struct FloatState {
    // weight per (demand, circuit, vertex) variable
    std::vector<double> w;
    double min_slack = -std::numeric_limits<double>::infinity();
};

class Rebalancer {
public:
    Rebalancer(const AllocProblem& problem, const DecomposeOptions& opts)
        : problem_(problem), opts_(opts) {
        for (std::size_t d = 0; d < problem.demands.size(); ++d) {
            const auto& demand = problem.demands[d];
            for (std::size_t c = 0; c < demand.circuits.size(); ++c) {
                const auto& circuit = demand.circuits[c];
                for (std::size_t v = 0; v < circuit.support.outer.size(); ++v) {
                    vars_.push_back({d, c, v});
                    pool_members_[circuit.pool_keys[v]].push_back(vars_.size() - 1);
                }
            }
        }
    }

    // Fair-share initialization, then multiplicative rebalancing toward the
    // maximin of log(sum of circuit numbers) - log(demand).
    FloatState run(int iterations) const {
        FloatState state;
        state.w.assign(vars_.size(), 0.0);
        for (const auto& [key, members] : pool_members_) {
            const double share = problem_.budget.at(key).get_d() / static_cast<double>(members.size());
            for (std::size_t m : members) state.w[m] = share;
        }

        std::vector<double> best = state.w;
        double best_slack = -std::numeric_limits<double>::infinity();

        std::vector<double> log_theta;
        std::vector<double> circuit_share; // theta_c / sum theta within demand
        std::vector<double> slack(problem_.demands.size(), 0.0);

        for (int iter = 0; iter < iterations; ++iter) {
            compute(state.w, log_theta, circuit_share, slack);
            double min_slack = std::numeric_limits<double>::infinity();
            for (double s : slack) min_slack = std::min(min_slack, s);
            if (min_slack > best_slack) {
                best_slack = min_slack;
                best = state.w;
            }

            // Soft-min weights concentrate the update on the tightest demands.
            double wsum = 0.0;
            std::vector<double> omega(problem_.demands.size());
            for (std::size_t d = 0; d < omega.size(); ++d) {
                omega[d] = std::exp(-(slack[d] - min_slack) / opts_.softmin_temp);
                wsum += omega[d];
            }
            for (double& o : omega) o /= wsum;

            // Water-filling step: equalize the marginal value of budget across
            // each pool's users. Fixed points are exactly the equalized states.
            std::vector<double> next = state.w;
            for (const auto& [key, members] : pool_members_) {
                double total = 0.0;
                std::vector<double> updated(members.size());
                for (std::size_t i = 0; i < members.size(); ++i) {
                    const VarRef& ref = vars_[members[i]];
                    const auto& circuit = problem_.demands[ref.demand].circuits[ref.circuit];
                    const double lam = lambda_of(circuit, ref.vertex);
                    std::size_t ci = circuit_base_.at({ref.demand, ref.circuit});
                    const double marginal =
                        omega[ref.demand] * circuit_share[ci] * lam / std::max(state.w[members[i]], 1e-300);
                    updated[i] = state.w[members[i]] * std::pow(std::max(marginal, 1e-300), opts_.eta);
                    total += updated[i];
                }
                const double pool = problem_.budget.at(key).get_d();
                for (std::size_t i = 0; i < members.size(); ++i) next[members[i]] = updated[i] / total * pool;
            }
            state.w = std::move(next);
        }
        state.w = best;
        state.min_slack = best_slack;
        return state;
    }

    // theta share per circuit at a weight assignment, used to pick dominant
    // circuits for the sparse snap attempt.
    std::vector<std::vector<double>> circuit_shares(const std::vector<double>& w) const {
        std::vector<double> log_theta, share, slack;
        compute(w, log_theta, share, slack);
        std::vector<std::vector<double>> out(problem_.demands.size());
        for (std::size_t d = 0; d < problem_.demands.size(); ++d) {
            out[d].resize(problem_.demands[d].circuits.size());
            for (std::size_t c = 0; c < out[d].size(); ++c) out[d][c] = share[circuit_base_.at({d, c})];
        }
        return out;
    }

    const std::vector<VarRef>& vars() const { return vars_; }

private:
    double lambda_of(const AllocCircuit& circuit, std::size_t vertex) const {
        return circuit.lambda.lambda.at(circuit.support.outer[vertex]).get_d();
    }

    void compute(const std::vector<double>& w, std::vector<double>& log_theta,
                 std::vector<double>& circuit_share, std::vector<double>& slack) const {
        circuit_base_.clear();
        log_theta.clear();
        std::vector<std::vector<double>> per_demand(problem_.demands.size());
        std::size_t var_index = 0;
        for (std::size_t d = 0; d < problem_.demands.size(); ++d) {
            const auto& demand = problem_.demands[d];
            for (std::size_t c = 0; c < demand.circuits.size(); ++c) {
                const auto& circuit = demand.circuits[c];
                double lt = 0.0;
                for (std::size_t v = 0; v < circuit.support.outer.size(); ++v, ++var_index) {
                    const double lam = lambda_of(circuit, v);
                    lt += lam * (std::log(std::max(w[var_index], 1e-300)) - std::log(lam));
                }
                circuit_base_[{d, c}] = log_theta.size();
                log_theta.push_back(lt);
                per_demand[d].push_back(lt);
            }
        }
        circuit_share.assign(log_theta.size(), 0.0);
        slack.assign(problem_.demands.size(), 0.0);
        for (std::size_t d = 0; d < problem_.demands.size(); ++d) {
            const auto& lts = per_demand[d];
            const double peak = *std::max_element(lts.begin(), lts.end());
            double sum = 0.0;
            for (double lt : lts) sum += std::exp(lt - peak);
            const double log_sum = peak + std::log(sum);
            for (std::size_t c = 0; c < lts.size(); ++c) {
                circuit_share[circuit_base_.at({d, c})] = std::exp(lts[c] - log_sum);
            }
            slack[d] = log_sum - std::log(problem_.demands[d].amount.get_d());
        }
    }

    const AllocProblem& problem_;
    const DecomposeOptions& opts_;
    std::vector<VarRef> vars_;
    std::map<Exponent, std::vector<std::size_t>, GradedLexLess> pool_members_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::size_t> circuit_base_;
};

// Snaps the float weights of `chosen` circuits to rationals at the given
// denominator cap, enforcing pool feasibility exactly. Returns nullopt when a
// weight collapses to zero or feasibility repair fails.
std::optional<AllocSolution> snap_solution(const AllocProblem& problem,
                                           const std::vector<std::vector<std::size_t>>& chosen,
                                           const std::vector<std::vector<double>>& weights, // [demand][flat per chosen circuit vertex]
                                           const std::vector<std::vector<Rational>>& amounts,
                                           unsigned long cap,
                                           const CompareOptions& compare) {
    AllocSolution solution;
    std::map<Exponent, Rational, GradedLexLess> used;
    struct Cell {
        std::size_t piece;
        Exponent concrete;
        Exponent pool;
    };
    std::vector<Cell> cells;

    for (std::size_t d = 0; d < problem.demands.size(); ++d) {
        std::size_t flat = 0;
        for (std::size_t k = 0; k < chosen[d].size(); ++k) {
            const std::size_t c = chosen[d][k];
            const auto& circuit = problem.demands[d].circuits[c];
            AllocPiece piece;
            piece.demand = d;
            piece.circuit = c;
            piece.amount = amounts[d][k];
            for (std::size_t v = 0; v < circuit.support.outer.size(); ++v, ++flat) {
                Rational w = limit_denominator(weights[d][flat], cap);
                if (sgn(w) <= 0) return std::nullopt;
                piece.weights.emplace(circuit.support.outer[v], w);
                used[circuit.pool_keys[v]] += w;
                cells.push_back({solution.pieces.size(), circuit.support.outer[v], circuit.pool_keys[v]});
            }
            solution.pieces.push_back(std::move(piece));
        }
    }

    // Pool repair: pull any overdraft out of the largest weights first.
    for (auto& [key, total] : used) {
        Rational budget = problem.budget.at(key);
        Rational excess = total - budget;
        excess.canonicalize();
        if (sgn(excess) <= 0) continue;
        std::vector<Cell*> members;
        for (auto& cell : cells) {
            if (cell.pool == key) members.push_back(&cell);
        }
        std::sort(members.begin(), members.end(), [&](const Cell* a, const Cell* b) {
            return solution.pieces[a->piece].weights.at(a->concrete) >
                   solution.pieces[b->piece].weights.at(b->concrete);
        });
        for (Cell* cell : members) {
            if (sgn(excess) <= 0) break;
            Rational& w = solution.pieces[cell->piece].weights.at(cell->concrete);
            Rational take = std::min(excess, Rational(w - Rational(1, 1000000)));
            take.canonicalize();
            if (sgn(take) <= 0) continue;
            w -= take;
            w.canonicalize();
            excess -= take;
            excess.canonicalize();
        }
        if (sgn(excess) > 0) return std::nullopt;
        total = std::min(total, budget);
    }

    // Exact circuit-number feasibility per piece.
    for (const auto& piece : solution.pieces) {
        const auto& circuit = problem.demands[piece.demand].circuits[piece.circuit];
        ThetaComparison c = compare_theta(piece.amount, piece.weights, circuit.lambda, compare);
        if (c.cmp == Cmp::Greater) return std::nullopt;
    }

    // Leftovers per pool.
    solution.leftover = problem.budget;
    for (const auto& piece : solution.pieces) {
        const auto& circuit = problem.demands[piece.demand].circuits[piece.circuit];
        std::size_t v = 0;
        for (const auto& exp : circuit.support.outer) {
            solution.leftover[circuit.pool_keys[v]] -= piece.weights.at(exp);
            ++v;
        }
    }
    for (auto& [key, left] : solution.leftover) {
        left.canonicalize();
        if (sgn(left) < 0) return std::nullopt;
    }
    return solution;
}

std::optional<AllocSolution> solve_allocation(const AllocProblem& problem, const DecomposeOptions& opts) {
    for (const auto& demand : problem.demands) {
        if (demand.circuits.empty()) return std::nullopt;
        if (sgn(demand.amount) <= 0) fail(ErrorCode::Internal, "demands must be positive");
    }
    if (problem.demands.empty()) {
        return AllocSolution{{}, problem.budget};
    }

    Rebalancer rebalancer(problem, opts);
    FloatState state = rebalancer.run(opts.max_iter);
    auto shares = rebalancer.circuit_shares(state.w);

    // Gather per-variable floats grouped by (demand, circuit).
    auto weights_for = [&](const std::vector<std::vector<std::size_t>>& chosen) {
        std::vector<std::vector<double>> out(problem.demands.size());
        for (std::size_t d = 0; d < problem.demands.size(); ++d) {
            for (std::size_t k = 0; k < chosen[d].size(); ++k) {
                const std::size_t c = chosen[d][k];
                std::size_t var = 0;
                for (std::size_t dd = 0; dd < problem.demands.size(); ++dd) {
                    for (std::size_t cc = 0; cc < problem.demands[dd].circuits.size(); ++cc) {
                        for (std::size_t v = 0; v < problem.demands[dd].circuits[cc].support.outer.size(); ++v, ++var) {
                            if (dd == d && cc == c) out[d].push_back(state.w[var]);
                        }
                    }
                }
            }
        }
        return out;
    };

    // Attempt 1: single dominant circuit per demand carrying the full amount,
    // refined by a short rebalance restricted to those circuits.
    {
        std::vector<std::vector<std::size_t>> chosen(problem.demands.size());
        AllocProblem reduced = problem;
        for (std::size_t d = 0; d < problem.demands.size(); ++d) {
            std::size_t best = 0;
            for (std::size_t c = 1; c < shares[d].size(); ++c) {
                if (shares[d][c] > shares[d][best]) best = c;
            }
            chosen[d] = {best};
            reduced.demands[d].circuits = {problem.demands[d].circuits[best]};
        }
        Rebalancer reduced_rebalancer(reduced, opts);
        FloatState reduced_state = reduced_rebalancer.run(std::max(100, opts.max_iter / 2));

        std::vector<std::vector<double>> w(problem.demands.size());
        {
            std::size_t var = 0;
            for (std::size_t d = 0; d < reduced.demands.size(); ++d) {
                for (std::size_t v = 0; v < reduced.demands[d].circuits[0].support.outer.size(); ++v, ++var) {
                    w[d].push_back(reduced_state.w[var]);
                }
            }
        }
        std::vector<std::vector<Rational>> amounts(problem.demands.size());
        for (std::size_t d = 0; d < problem.demands.size(); ++d) amounts[d] = {problem.demands[d].amount};
        for (unsigned long cap : opts.snap_denominators) {
            if (auto solution = snap_solution(problem, chosen, w, amounts, cap, opts.compare)) return solution;
        }
    }

    // Attempt 2: keep every circuit with a visible share; split each demand
    // proportionally, assigning the residual to the dominant circuit.
    {
        std::vector<std::vector<std::size_t>> chosen(problem.demands.size());
        for (std::size_t d = 0; d < problem.demands.size(); ++d) {
            for (std::size_t c = 0; c < shares[d].size(); ++c) {
                if (shares[d][c] > 1e-6) chosen[d].push_back(c);
            }
            if (chosen[d].empty()) chosen[d] = {0};
        }
        auto w = weights_for(chosen);
        for (unsigned long cap : opts.snap_denominators) {
            std::vector<std::vector<Rational>> amounts(problem.demands.size());
            bool ok = true;
            for (std::size_t d = 0; d < problem.demands.size(); ++d) {
                const auto& demand = problem.demands[d];
                std::size_t dominant = 0;
                for (std::size_t k = 1; k < chosen[d].size(); ++k) {
                    if (shares[d][chosen[d][k]] > shares[d][chosen[d][dominant]]) dominant = k;
                }
                Rational rest(0);
                amounts[d].assign(chosen[d].size(), Rational(0));
                for (std::size_t k = 0; k < chosen[d].size(); ++k) {
                    if (k == dominant) continue;
                    Rational a = limit_denominator(shares[d][chosen[d][k]] * demand.amount.get_d(), cap);
                    if (sgn(a) < 0) a = 0;
                    amounts[d][k] = a;
                    rest += a;
                }
                Rational main = demand.amount - rest;
                main.canonicalize();
                if (sgn(main) <= 0) { ok = false; break; }
                amounts[d][dominant] = main;
            }
            if (!ok) continue;
            // Drop zero-amount circuits.
            std::vector<std::vector<std::size_t>> pruned(problem.demands.size());
            std::vector<std::vector<Rational>> pruned_amounts(problem.demands.size());
            std::vector<std::vector<double>> pruned_w(problem.demands.size());
            for (std::size_t d = 0; d < problem.demands.size(); ++d) {
                std::size_t flat = 0;
                for (std::size_t k = 0; k < chosen[d].size(); ++k) {
                    const auto& circuit = problem.demands[d].circuits[chosen[d][k]];
                    const std::size_t arity = circuit.support.outer.size();
                    if (sgn(amounts[d][k]) > 0) {
                        pruned[d].push_back(chosen[d][k]);
                        pruned_amounts[d].push_back(amounts[d][k]);
                        for (std::size_t v = 0; v < arity; ++v) pruned_w[d].push_back(w[d][flat + v]);
                    }
                    flat += arity;
                }
            }
            if (auto solution = snap_solution(problem, pruned, pruned_w, pruned_amounts, cap, opts.compare)) {
                return solution;
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<SoncCertificate> decompose(const SparsePolynomial& p, const DecomposeOptions& opts) {
    SignedSupport signed_support = signed_partition(p);
    SoncCertificate cert;
    cert.nvars = p.nvars();

    std::vector<Exponent> a_plus(signed_support.a_plus.begin(), signed_support.a_plus.end());
    std::map<Exponent, Rational, GradedLexLess> budget;
    for (const auto& e : a_plus) budget.emplace(e, p.coefficient(e));

    // Positive terms outside A+ (odd exponents with positive coefficients)
    // ride along as inner terms of thin circuit pieces.
    std::vector<std::pair<Exponent, Rational>> positive_inners;
    AllocProblem problem;
    for (const auto& beta : signed_support.a_minus) {
        Rational c = p.coefficient(beta);
        if (sgn(c) > 0) {
            positive_inners.emplace_back(beta, c);
        }
    }
    for (const auto& [beta, c] : positive_inners) {
        auto circuits = enumerate_circuits(a_plus, beta);
        if (circuits.empty()) return std::nullopt;
        const auto& support = circuits.front();
        BarycentricCoords lambda = barycentric_coordinates(support.outer, beta);
        std::vector<CircuitTerm> outer;
        for (const auto& exp : support.outer) {
            Rational delta = budget.at(exp) / 4096;
            delta.canonicalize();
            if (sgn(delta) <= 0) return std::nullopt;
            budget.at(exp) -= delta;
            outer.push_back({exp, delta});
        }
        cert.pieces.push_back(make_circuit_polynomial(outer, {beta, c}));
    }

    problem.budget = budget;
    for (const auto& beta : signed_support.a_minus) {
        Rational c = p.coefficient(beta);
        if (sgn(c) >= 0) continue;
        AllocDemand demand;
        demand.beta = beta;
        demand.amount = abs(c);
        for (auto& support : enumerate_circuits(a_plus, beta)) {
            AllocCircuit circuit;
            circuit.lambda = barycentric_coordinates(support.outer, beta);
            circuit.pool_keys = support.outer; // identity pooling
            circuit.support = std::move(support);
            demand.circuits.push_back(std::move(circuit));
        }
        problem.demands.push_back(std::move(demand));
    }

    auto solution = solve_allocation(problem, opts);
    if (!solution) return std::nullopt;

    for (const auto& piece : solution->pieces) {
        const auto& demand = problem.demands[piece.demand];
        std::vector<CircuitTerm> outer;
        for (const auto& [exp, w] : piece.weights) outer.push_back({exp, w});
        Rational inner = -piece.amount;
        cert.pieces.push_back(make_circuit_polynomial(outer, {demand.beta, inner}));
    }
    for (const auto& [exp, left] : solution->leftover) {
        if (sgn(left) > 0) cert.squares.push_back({exp, left});
    }

    if (verify(p, cert, opts.compare).verdict != Verdict::Verified) return std::nullopt;
    return cert;
}

namespace {

// Keeps one circuit per stabilizer class of the orbit representative: class
// mates expand to identical piece sets under the group sum.
std::vector<CircuitSupport> dedup_by_stabilizer(const std::vector<CircuitSupport>& circuits,
                                                const Exponent& beta_rep) {
    const int n = beta_rep.dim();
    std::vector<Permutation> stabilizer;
    for (const auto& sigma : all_permutations(n)) {
        if (sigma.apply(beta_rep) == beta_rep) stabilizer.push_back(sigma);
    }
    std::set<std::vector<std::vector<int>>> seen;
    std::vector<CircuitSupport> out;
    for (const auto& circuit : circuits) {
        std::vector<std::vector<int>> canonical;
        bool first = true;
        for (const auto& sigma : stabilizer) {
            std::vector<std::vector<int>> image;
            image.reserve(circuit.outer.size());
            for (const auto& e : circuit.outer) image.push_back(sigma.apply(e).entries());
            std::sort(image.begin(), image.end());
            if (first || image < canonical) canonical = std::move(image);
            first = false;
        }
        if (seen.insert(canonical).second) out.push_back(circuit);
    }
    return out;
}

} // namespace

std::optional<SymmetricSoncCertificate> decompose_symmetric(const SparsePolynomial& p,
                                                            const DecomposeOptions& opts) {
    if (!is_symmetric(p)) fail(ErrorCode::InputNotSymmetric, "decompose_symmetric requires a symmetric polynomial");
    const int n = p.nvars();
    const Rational group_order(Integer(static_cast<unsigned long>(factorial_u64(n))));

    SignedSupport signed_support = signed_partition(p);
    std::vector<Exponent> a_plus(signed_support.a_plus.begin(), signed_support.a_plus.end());

    SymmetricSoncCertificate cert;
    cert.nvars = n;
    cert.mode = SymmetrizeMode::GroupSum;

    // Orbit-pooled budgets: each positive orbit contributes c * |orbit| / n!.
    AllocProblem problem;
    for (const auto& o : orbit_decompose_support(a_plus)) {
        Rational coefficient = p.coefficient(o.elements.front());
        Rational pool = coefficient * Rational(Integer(static_cast<unsigned long>(o.size))) / group_order;
        pool.canonicalize();
        problem.budget.emplace(o.representative, pool);
    }

    std::vector<Exponent> a_minus(signed_support.a_minus.begin(), signed_support.a_minus.end());
    auto pool_key = [](const Exponent& e) { return e.sorted_desc(); };

    for (const auto& o : orbit_decompose_support(a_minus)) {
        const Exponent& rep = o.representative;
        Rational c = p.coefficient(rep);
        Rational scaled = abs(c) * Rational(Integer(static_cast<unsigned long>(o.size))) / group_order;
        scaled.canonicalize();
        if (sgn(c) > 0) {
            // Symmetric certificates carry only nonpositive inner
            // coefficients; positive mass outside A+ is out of reach here.
            return std::nullopt;
        }
        if (sgn(c) == 0) continue;
        auto circuits = dedup_by_stabilizer(enumerate_circuits(a_plus, rep), rep);
        AllocDemand demand;
        demand.beta = rep;
        demand.amount = scaled;
        for (auto& support : circuits) {
            AllocCircuit circuit;
            circuit.lambda = barycentric_coordinates(support.outer, rep);
            circuit.pool_keys.reserve(support.outer.size());
            for (const auto& exp : support.outer) circuit.pool_keys.push_back(pool_key(exp));
            circuit.support = std::move(support);
            demand.circuits.push_back(std::move(circuit));
        }
        problem.demands.push_back(std::move(demand));
    }

    auto solution = solve_allocation(problem, opts);
    if (!solution) return std::nullopt;

    for (const auto& piece : solution->pieces) {
        const auto& demand = problem.demands[piece.demand];
        std::vector<CircuitTerm> outer;
        for (const auto& [exp, w] : piece.weights) outer.push_back({exp, w});
        cert.orbit_pieces.push_back(make_circuit_polynomial(outer, {demand.beta, Rational(-piece.amount)}));
    }
    for (const auto& [rep, left] : solution->leftover) {
        if (sgn(left) > 0) cert.squares.push_back({rep, left});
    }

    if (verify_symmetric(p, cert, opts.compare).verdict != Verdict::Verified) return std::nullopt;
    return cert;
}

} // namespace sonc

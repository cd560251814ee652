#include "oracle.hpp"

#include "errors.hpp"
#include "linalg.hpp"
#include "symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace sonc {

namespace {

// splitmix64: tiny, portable, and stateless per sample index, which keeps
// results identical for any worker count.
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::vector<double> sample_point(std::uint64_t seed, int index, int n, const FalsificationConfig& cfg) {
    std::vector<double> x(static_cast<std::size_t>(n));
    std::uint64_t state = splitmix64(seed ^ (0x51ed270b2f6c87ULL + static_cast<std::uint64_t>(index) * 0x2545f4914f6cdd1dULL));
    const bool log_scale = index % 2 == 1;
    for (int i = 0; i < n; ++i) {
        state = splitmix64(state);
        double u = unit_double(state);
        state = splitmix64(state);
        double v = unit_double(state);
        double magnitude;
        if (log_scale) {
            // log-uniform over [radius * 2^-16, radius]
            magnitude = cfg.box_radius * std::exp2(-16.0 * u);
        } else {
            magnitude = cfg.box_radius * u;
        }
        double sign = 1.0;
        if (!cfg.nonnegative_orthant && v < 0.5) sign = -1.0;
        x[static_cast<std::size_t>(i)] = sign * magnitude;
    }
    return x;
}

struct Candidate {
    double value = std::numeric_limits<double>::infinity();
    int index = -1;
    std::vector<double> point;
};

Candidate scan_range(const SparsePolynomial& p, const FalsificationConfig& cfg, int begin, int end) {
    Candidate best;
    const int n = p.nvars();
    for (int k = begin; k < end; ++k) {
        std::vector<double> x = sample_point(cfg.seed, k, n, cfg);
        double v = evaluate(p, x);
        if (v < best.value || (v == best.value && (best.index < 0 || k < best.index))) {
            best = {v, k, std::move(x)};
        }
    }
    return best;
}

void coordinate_descent(const SparsePolynomial& p, std::vector<double>& x, double& value,
                        const FalsificationConfig& cfg) {
    const int n = p.nvars();
    double step = 0.25 * cfg.box_radius;
    for (int round = 0; round < cfg.refine_steps; ++round) {
        bool improved = false;
        for (int i = 0; i < n; ++i) {
            for (double direction : {+1.0, -1.0}) {
                std::vector<double> y = x;
                double moved = y[static_cast<std::size_t>(i)] + direction * step;
                if (cfg.nonnegative_orthant && moved < 0.0) moved = 0.0;
                moved = std::clamp(moved, cfg.nonnegative_orthant ? 0.0 : -cfg.box_radius, cfg.box_radius);
                y[static_cast<std::size_t>(i)] = moved;
                double v = evaluate(p, y);
                if (v < value) {
                    x = std::move(y);
                    value = v;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
        if (step < 1e-14 * cfg.box_radius) break;
    }
}

std::optional<Witness> confirm_witness(const SparsePolynomial& p, const std::vector<double>& x, double value) {
    // First try a low-denominator snap of the point (readable witnesses such
    // as (1, 1)); fall back to the exact dyadic point of the doubles.
    for (unsigned long cap : {16UL, 4096UL, 0UL}) {
        std::vector<Rational> q;
        q.reserve(x.size());
        for (double xi : x) {
            q.push_back(cap == 0 ? rational_from_double(xi) : limit_denominator(xi, cap));
        }
        Rational exact = evaluate_exact(p, q);
        if (sgn(exact) < 0) {
            return Witness{x, value, std::move(q), std::move(exact)};
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Witness> falsify(const SparsePolynomial& p, const FalsificationConfig& cfg) {
    if (p.nvars() == 0 || cfg.samples <= 0) {
        return std::nullopt;
    }

    const int jobs = std::max(1, cfg.jobs);
    Candidate best;
    if (jobs == 1) {
        best = scan_range(p, cfg, 0, cfg.samples);
    } else {
        std::vector<Candidate> partial(static_cast<std::size_t>(jobs));
        std::vector<std::thread> workers;
        const int chunk = (cfg.samples + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            const int begin = t * chunk;
            const int end = std::min(cfg.samples, begin + chunk);
            workers.emplace_back([&, t, begin, end] { partial[static_cast<std::size_t>(t)] = scan_range(p, cfg, begin, end); });
        }
        for (auto& w : workers) w.join();
        for (const auto& c : partial) {
            if (c.index < 0) continue;
            if (c.value < best.value || (c.value == best.value && (best.index < 0 || c.index < best.index))) best = c;
        }
    }
    if (best.index < 0) return std::nullopt;

    coordinate_descent(p, best.point, best.value, cfg);
    if (best.value >= cfg.threshold) return std::nullopt;
    return confirm_witness(p, best.point, best.value);
}

bool permutohedron_membership_bruteforce(const Exponent& beta, const Exponent& alpha) {
    if (alpha.dim() != beta.dim()) fail(ErrorCode::DimensionMismatch, "vectors of unequal length");
    const int n = alpha.dim();
    if (n > 6) fail(ErrorCode::DimensionTooLarge, "brute-force membership is capped at n = 6");

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
    return linalg::nonneg_solve(cols, rhs).has_value();
}

GridResult min_on_grid(const SparsePolynomial& p, double radius, int steps_per_axis, std::uint64_t budget) {
    const int n = p.nvars();
    if (steps_per_axis < 1) fail(ErrorCode::InvalidArgument, "steps_per_axis must be positive");
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(steps_per_axis);
        if (total > budget) fail(ErrorCode::BudgetExceeded, "grid size exceeds the configured budget");
    }

    std::vector<double> axis(static_cast<std::size_t>(steps_per_axis));
    for (int k = 0; k < steps_per_axis; ++k) {
        axis[static_cast<std::size_t>(k)] =
            steps_per_axis == 1 ? 0.0 : -radius + (2.0 * radius * k) / (steps_per_axis - 1);
    }

    std::vector<int> odometer(static_cast<std::size_t>(n), 0);
    std::vector<double> x(static_cast<std::size_t>(n), axis.empty() ? 0.0 : axis[0]);
    GridResult best{x, evaluate(p, x)};
    if (n == 0) return best;
    while (true) {
        int i = 0;
        while (i < n) {
            if (++odometer[static_cast<std::size_t>(i)] < steps_per_axis) {
                x[static_cast<std::size_t>(i)] = axis[static_cast<std::size_t>(odometer[static_cast<std::size_t>(i)])];
                break;
            }
            odometer[static_cast<std::size_t>(i)] = 0;
            x[static_cast<std::size_t>(i)] = axis[0];
            ++i;
        }
        if (i == n) break;
        double v = evaluate(p, x);
        if (v < best.value) best = {x, v};
    }
    return best;
}

} // namespace sonc

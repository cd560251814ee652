#include "muirhead.hpp"

#include "errors.hpp"
#include "oracle.hpp"
#include "support/golden.hpp"

#include <doctest.h>

#include <cmath>

using namespace sonc;
using namespace sonc::testing;

TEST_CASE("majorization golden cases") {
    CHECK(majorizes(E({1, 4, 0}), E({2, 3, 0})));
    CHECK(majorizes(E({4, 0, 0, 0}), E({1, 1, 1, 1})));
    CHECK_FALSE(majorizes(E({2, 2, 0}), E({3, 1, 0})));
    CHECK_FALSE(majorizes(E({2, 2, 0}), E({2, 1, 0}))); // unequal sums
}

TEST_CASE("permutation-polytope membership golden cases") {
    CHECK(in_permutation_polytope(E({2, 3, 0}), E({1, 4, 0})));
    CHECK(in_permutation_polytope(E({4, 1, 0}), E({1, 4, 0})));
    CHECK_FALSE(in_permutation_polytope(E({5, 0, 0}), E({1, 4, 0})));
}

TEST_CASE("membership agrees with the brute-force oracle exhaustively (n = 3, entries <= 3)") {
    std::vector<Exponent> all;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c) all.push_back(E({a, b, c}));
    int compared = 0;
    for (const auto& alpha : all) {
        for (const auto& beta : all) {
            if (alpha.degree() != beta.degree()) continue;
            ++compared;
            CHECK(in_permutation_polytope(beta, alpha) == permutohedron_membership_bruteforce(beta, alpha));
        }
    }
    CHECK(compared > 300);
}

TEST_CASE("membership agrees with the oracle on random instances (n = 4, 5)") {
    Rng rng(61);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = rng.range(4, 5);
        std::vector<int> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
        for (auto& v : a) v = rng.range(0, 4);
        long sum = 0;
        for (int v : a) sum += v;
        // Random b with the same total (rejection keeps the case balanced).
        long remaining = sum;
        for (int i = 0; i < n - 1; ++i) {
            b[static_cast<std::size_t>(i)] = rng.range(0, static_cast<int>(std::min<long>(remaining, 4)));
            remaining -= b[static_cast<std::size_t>(i)];
        }
        if (remaining > 4) continue;
        b[static_cast<std::size_t>(n - 1)] = static_cast<int>(remaining);
        Exponent alpha(a), beta(b);
        CHECK(in_permutation_polytope(beta, alpha) == permutohedron_membership_bruteforce(beta, alpha));
    }
}

TEST_CASE("Caratheodory decomposition golden cases") {
    SUBCASE("two-term decomposition with exact weights") {
        auto decomp = caratheodory_decomposition(E({2, 3, 0}), E({1, 4, 0}));
        REQUIRE(decomp.terms.size() == 2);
        CHECK(decomp.terms[0].first == Permutation::identity(3));
        CHECK(decomp.terms[0].second == Q(2, 3));
        CHECK(decomp.terms[1].first == Permutation::transposition(3, 1, 2));
        CHECK(decomp.terms[1].second == Q(1, 3));
    }
    SUBCASE("beta equal to a permutation of alpha") {
        auto decomp = caratheodory_decomposition(E({0, 1, 4}), E({1, 4, 0}));
        REQUIRE(decomp.terms.size() == 1);
        CHECK(decomp.terms[0].second == Q(1));
        CHECK(decomp.terms[0].first.apply(E({1, 4, 0})) == E({0, 1, 4}));
    }
    SUBCASE("symmetry forces equal weights") {
        auto decomp = caratheodory_decomposition(E({1, 1, 1}), E({3, 0, 0}));
        REQUIRE(decomp.terms.size() == 3);
        for (const auto& [sigma, w] : decomp.terms) CHECK(w == Q(1, 3));
    }
    SUBCASE("outside the polytope") {
        try {
            caratheodory_decomposition(E({5, 0, 0}), E({1, 4, 0}));
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotInPolytope);
        }
    }
}

TEST_CASE("Caratheodory decompositions reconstruct beta with independent support") {
    Rng rng(67);
    int done = 0;
    while (done < 120) {
        const int n = rng.range(3, 5);
        std::vector<int> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
        for (auto& v : a) v = rng.range(0, 5);
        long sum = 0;
        for (int v : a) sum += v;
        long remaining = sum;
        for (int i = 0; i < n - 1; ++i) {
            b[static_cast<std::size_t>(i)] = rng.range(0, static_cast<int>(std::min<long>(remaining, 5)));
            remaining -= b[static_cast<std::size_t>(i)];
        }
        if (remaining > 5) continue;
        b[static_cast<std::size_t>(n - 1)] = static_cast<int>(remaining);
        Exponent alpha(a), beta(b);
        if (!in_permutation_polytope(beta, alpha)) continue;
        ++done;

        auto decomp = caratheodory_decomposition(beta, alpha);
        CHECK(decomp.terms.size() <= static_cast<std::size_t>(n + 1));
        Rational total(0);
        std::vector<Rational> acc(static_cast<std::size_t>(n), Q(0));
        for (const auto& [sigma, w] : decomp.terms) {
            CHECK(sgn(w) > 0);
            CHECK(w <= Q(1));
            total += w;
            Exponent img = sigma.apply(alpha);
            for (int i = 0; i < n; ++i) acc[static_cast<std::size_t>(i)] += w * img[i];
        }
        CHECK(total == Q(1));
        for (int i = 0; i < n; ++i) CHECK(acc[static_cast<std::size_t>(i)] == Q(beta[i]));
    }
}

TEST_CASE("classical Muirhead gap golden values") {
    CHECK(muirhead_gap(E({1, 4, 0}), E({2, 3, 0}), std::vector<double>{1, 1, 1}) == doctest::Approx(0.0));
    CHECK(muirhead_gap(E({3, 0, 0}), E({1, 1, 1}), std::vector<double>{1, 2, 3}) == doctest::Approx(36.0));
    CHECK(muirhead_gap(E({2, 3, 0}), E({2, 3, 0}), std::vector<double>{0.5, 2, 1.5}) == doctest::Approx(0.0));
    CHECK_THROWS_AS(muirhead_gap(E({1, 4, 0}), E({2, 3, 0}), std::vector<double>{1, -1, 1}), Error);
    CHECK_THROWS_AS(muirhead_gap(E({2, 2, 0}), E({3, 1, 0}), std::vector<double>{1, 1, 1}), Error);
}

TEST_CASE("generalized Muirhead gap golden value") {
    auto decomp = caratheodory_decomposition(E({2, 3, 0}), E({1, 4, 0}));
    double gap = generalized_muirhead_gap(E({1, 4, 0}), decomp, std::vector<double>{8, 1},
                                          std::vector<double>{1, 1, 1});
    // LHS = 6 * 8^(2/3) = 24, RHS = 6 * (8*2/3 + 1*1/3) = 34.
    CHECK(gap == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("generalized gap with all-ones weights equals the classical gap bitwise") {
    Rng rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.range(3, 4);
        std::vector<int> a(static_cast<std::size_t>(n));
        for (auto& v : a) v = rng.range(0, 6);
        Exponent alpha(a);
        Orbit orb = orbit(alpha);
        // A guaranteed member: an average of two orbit elements that lands on
        // the lattice, else beta = alpha itself.
        Exponent beta = alpha;
        for (const auto& candidate : orb.elements) {
            std::vector<int> mid(static_cast<std::size_t>(n));
            bool integral = true;
            for (int i = 0; i < n; ++i) {
                int s = alpha[i] + candidate[i];
                if (s % 2 != 0) { integral = false; break; }
                mid[static_cast<std::size_t>(i)] = s / 2;
            }
            if (integral) { beta = Exponent(mid); break; }
        }
        if (!in_permutation_polytope(beta, alpha)) continue;
        auto decomp = caratheodory_decomposition(beta, alpha);
        std::vector<double> ones(decomp.terms.size(), 1.0);
        std::vector<double> x(static_cast<std::size_t>(n));
        for (auto& xi : x) xi = 3.0 * rng.real01();
        double classical = muirhead_gap(alpha, beta, x);
        double generalized = generalized_muirhead_gap(alpha, decomp, ones, x);
        CHECK(classical == generalized); // bit-for-bit
    }
}

TEST_CASE("generalized gap is nonnegative on random instances") {
    Rng rng(73);
    int done = 0;
    while (done < 300) {
        const int n = rng.range(3, 4);
        std::vector<int> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
        for (auto& v : a) v = rng.range(0, 6);
        long sum = 0;
        for (int v : a) sum += v;
        long remaining = sum;
        for (int i = 0; i < n - 1; ++i) {
            b[static_cast<std::size_t>(i)] = rng.range(0, static_cast<int>(std::min<long>(remaining, 6)));
            remaining -= b[static_cast<std::size_t>(i)];
        }
        if (remaining > 6) continue;
        b[static_cast<std::size_t>(n - 1)] = static_cast<int>(remaining);
        Exponent alpha(a), beta(b);
        if (!in_permutation_polytope(beta, alpha)) continue;
        ++done;

        auto decomp = caratheodory_decomposition(beta, alpha);
        std::vector<double> bs(decomp.terms.size());
        for (auto& v : bs) v = 10.0 * rng.real01();
        std::vector<double> x(static_cast<std::size_t>(n));
        for (auto& xi : x) xi = 3.0 * rng.real01();
        double gap = generalized_muirhead_gap(alpha, decomp, bs, x);
        // RHS magnitude as the tolerance scale, via an independent evaluation.
        Rational mult(0);
        for (std::size_t j = 0; j < decomp.terms.size(); ++j)
            mult += rational_from_double(bs[j]) * decomp.terms[j].second;
        SparsePolynomial mono = SparsePolynomial::from_terms(n, {{alpha, Q(1)}});
        double s_alpha = evaluate(symmetrize(mono, SymmetrizeMode::GroupSum), x);
        double scale = std::max(std::abs(mult.get_d() * s_alpha), 1.0);
        CHECK(gap >= -1e-9 * scale);
    }
}

TEST_CASE("generalized gap rejects n < 3 and mismatched b") {
    auto decomp = caratheodory_decomposition(E({2, 3, 0}), E({1, 4, 0}));
    CHECK_THROWS_AS(generalized_muirhead_gap(E({1, 4, 0}), decomp, std::vector<double>{1.0},
                                             std::vector<double>{1, 1, 1}),
                    Error);
    CaratheodoryDecomposition tiny;
    tiny.alpha = E({2, 0});
    tiny.beta = E({1, 1});
    CHECK_THROWS_AS(generalized_muirhead_gap(E({2, 0}), tiny, std::vector<double>{}, std::vector<double>{1, 1}),
                    Error);
}

TEST_CASE("symmetric condition check") {
    SUBCASE("quartic example pieces: both at the boundary") {
        ConditionReport report = symmetric_condition_check({quartic_piece_111(), quartic_piece_123()});
        CHECK(report.satisfied);
        REQUIRE(report.per_piece.size() == 2);
        CHECK(report.per_piece[0].cmp == Cmp::Equal);
        CHECK(report.per_piece[1].cmp == Cmp::Equal);
        CHECK(report.per_piece[0].exact);
    }
    SUBCASE("violated condition") {
        auto hot = make_circuit_polynomial({{E({4, 0, 0}), Q(1, 4)},
                                            {E({0, 4, 4}), Q(1, 4)},
                                            {E({0, 0, 0}), Q(1, 2)}},
                                           {E({1, 1, 1}), Q(-11, 10)});
        ConditionReport report = symmetric_condition_check({hot});
        CHECK_FALSE(report.satisfied);
        CHECK(report.per_piece[0].cmp == Cmp::Greater);
    }
    SUBCASE("empty list is vacuously true") {
        CHECK(symmetric_condition_check({}).satisfied);
    }
    SUBCASE("positive inner coefficient is rejected") {
        auto positive = motzkin_circuit(Q(1));
        CHECK_THROWS_AS(symmetric_condition_check({positive}), Error);
    }
}

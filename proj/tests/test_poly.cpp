#include "poly.hpp"

#include "errors.hpp"
#include "support/golden.hpp"

#include <doctest.h>

using namespace sonc;
using namespace sonc::testing;

TEST_CASE("parse: Motzkin polynomial has four terms") {
    SparsePolynomial p = motzkin();
    CHECK(p.nvars() == 2);
    CHECK(p.term_count() == 4);
    CHECK(p.coefficient(E({4, 2})) == Q(1));
    CHECK(p.coefficient(E({2, 4})) == Q(1));
    CHECK(p.coefficient(E({2, 2})) == Q(-3));
    CHECK(p.coefficient(E({0, 0})) == Q(1));
}

TEST_CASE("parse: zero terms are dropped") {
    SparsePolynomial p = parse_polynomial("0*x1 + 2");
    CHECK(p.term_count() == 1);
    CHECK(p.coefficient(E({0})) == Q(2));
}

TEST_CASE("parse: equal exponents merge") {
    SparsePolynomial p = parse_polynomial("1/2*x1^4 + 1/2*x1^4");
    CHECK(p.term_count() == 1);
    CHECK(p.coefficient(E({4})) == Q(1));
}

TEST_CASE("parse: errors carry positions and kinds") {
    CHECK_THROWS_WITH_AS(parse_polynomial("x1 + + x2"), doctest::Contains("position"), Error);
    CHECK_THROWS_AS(parse_polynomial("x1^-2"), Error);
    try {
        parse_polynomial("x1^-2");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NegativeExponent);
    }
    try {
        parse_polynomial("x1*x2*x3", 2);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
}

TEST_CASE("parse: declared variable count pads the dimension") {
    SparsePolynomial p = parse_polynomial("x1^2 + 1", 4);
    CHECK(p.nvars() == 4);
    CHECK(p.coefficient(E({2, 0, 0, 0})) == Q(1));
}

TEST_CASE("evaluate: Motzkin golden points") {
    SparsePolynomial p = motzkin();
    CHECK(evaluate(p, std::vector<double>{1.0, 1.0}) == doctest::Approx(0.0));
    CHECK(evaluate(p, std::vector<double>{0.0, 0.0}) == doctest::Approx(1.0));
    CHECK(evaluate(p, std::vector<double>{2.0, 1.0}) == doctest::Approx(9.0));
    CHECK(evaluate_exact(p, {Q(2), Q(1)}) == Q(9));
    CHECK(evaluate_exact(p, {Q(1), Q(1)}) == Q(0));
    CHECK_THROWS_AS(evaluate(p, std::vector<double>{1.0}), Error);
}

TEST_CASE("signed_partition golden examples") {
    SUBCASE("Motzkin") {
        SignedSupport s = signed_partition(motzkin());
        CHECK(s.a_plus == std::set<Exponent, GradedLexLess>{E({4, 2}), E({2, 4}), E({0, 0})});
        CHECK(s.a_minus == std::set<Exponent, GradedLexLess>{E({2, 2})});
    }
    SUBCASE("sum of monomial squares") {
        SignedSupport s = signed_partition(parse_polynomial("x1^2 + 1"));
        CHECK(s.a_plus.size() == 2);
        CHECK(s.a_minus.empty());
    }
    SUBCASE("quartic example") {
        SignedSupport s = signed_partition(quartic_example_f());
        CHECK(s.a_plus ==
              std::set<Exponent, GradedLexLess>{E({0, 0, 0}), E({4, 0, 0}), E({0, 4, 4}), E({0, 4, 8})});
        CHECK(s.a_minus == std::set<Exponent, GradedLexLess>{E({1, 1, 1}), E({1, 2, 3})});
    }
}

TEST_CASE("signed_partition is a partition of the support") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = rng.range(1, 4);
        std::vector<PolyTerm> terms;
        const int count = rng.range(1, 10);
        for (int t = 0; t < count; ++t) {
            std::vector<int> e(static_cast<std::size_t>(n));
            for (auto& v : e) v = rng.range(0, 6);
            terms.push_back({Exponent(e), Q(rng.range(-9, 9))});
        }
        SparsePolynomial p = SparsePolynomial::from_terms(n, terms);
        SignedSupport s = signed_partition(p);
        CHECK(s.a_plus.size() + s.a_minus.size() == p.term_count());
        for (const auto& e : s.a_plus) CHECK(s.a_minus.count(e) == 0);
    }
}

TEST_CASE("combine is exact") {
    SparsePolynomial p = motzkin();
    CHECK(combine(p, p, Q(1), Q(-1)).is_zero());
    CHECK(combine(p, p, Q(1, 2), Q(1, 2)) == p);

    SparsePolynomial f111 = circuit_to_polynomial(quartic_piece_111(), 3);
    SparsePolynomial f123 = circuit_to_polynomial(quartic_piece_123(), 3);
    CHECK(combine(f111, f123, Q(1), Q(1)) == quartic_example_f());

    SparsePolynomial one = parse_polynomial("1", 0);
    CHECK(combine(one, one, Q(1, 2), Q(1, 2)) == one);
}

TEST_CASE("combining the six two-vertex pieces reproduces the twelve-term polynomial") {
    SparsePolynomial acc(3);
    for (const auto& piece : twelve_term_pieces()) {
        acc = combine(acc, circuit_to_polynomial(piece, 3), Q(1), Q(1));
    }
    CHECK(acc == twelve_term_poly());
    CHECK(combine(acc, twelve_term_poly(), Q(1), Q(-1)).is_zero());
}

TEST_CASE("format/parse round trip is the identity on canonical forms") {
    Rng rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = rng.range(0, 4);
        std::vector<PolyTerm> terms;
        const int count = rng.range(0, 8);
        for (int t = 0; t < count; ++t) {
            std::vector<int> e(static_cast<std::size_t>(n));
            for (auto& v : e) v = rng.range(0, 5);
            long num = rng.range(-20, 20);
            long den = rng.range(1, 12);
            terms.push_back({Exponent(e), Q(num, den)});
        }
        SparsePolynomial p = SparsePolynomial::from_terms(n, terms);
        CAPTURE(format_polynomial(p));
        CHECK(parse_polynomial(format_polynomial(p), n) == p);
    }
}

TEST_CASE("JSON round trip") {
    SparsePolynomial p = quartic_example_f();
    CHECK(polynomial_from_json(polynomial_to_json(p)) == p);

    auto j = nlohmann::json::parse(R"({"n": 2, "terms": [{"exp": [4, 2], "coef": "1"},
                                        {"exp": [2, 2], "coef": "-3"}]})");
    SparsePolynomial q = polynomial_from_json(j);
    CHECK(q.term_count() == 2);
    CHECK(q.coefficient(E({2, 2})) == Q(-3));
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"n": 1, "terms": [{"exp": [1, 2], "coef": "1"}]})")),
                    Error);
}

TEST_CASE("rational parsing accepts p/q and rejects junk") {
    CHECK(rational_from_string("-3/6") == Q(-1, 2));
    CHECK(rational_to_string(Q(-1, 2)) == "-1/2");
    CHECK_THROWS_AS(rational_from_string("1.5"), Error);
    CHECK_THROWS_AS(rational_from_string("1/0"), Error);
    CHECK_THROWS_AS(rational_from_string("1/-2"), Error);
}

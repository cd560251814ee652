#pragma once

// Shared fixtures for the test suites: the worked examples used as golden
// data, plus a small deterministic RNG so seeded suites behave identically
// across platforms.

#include "certificate.hpp"
#include "circuit.hpp"
#include "poly.hpp"

#include <cstdint>
#include <vector>

namespace sonc::testing {

inline Exponent E(std::vector<int> v) { return Exponent(std::move(v)); }
inline Rational Q(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// x1^4 x2^2 + x1^2 x2^4 - 3 x1^2 x2^2 + 1
inline SparsePolynomial motzkin() {
    return parse_polynomial("x1^4*x2^2 + x1^2*x2^4 - 3*x1^2*x2^2 + 1");
}

inline CircuitPolynomialData motzkin_circuit(const Rational& inner = Q(-3)) {
    return make_circuit_polynomial({{E({4, 2}), Q(1)}, {E({2, 4}), Q(1)}, {E({0, 0}), Q(1)}},
                                   {E({2, 2}), inner});
}

// The twelve-term symmetric sum certified by six two-vertex circuits.
inline SparsePolynomial twelve_term_poly() {
    return parse_polynomial(
        "x1^2*x2^8 + x1^2*x3^8 + x1^8*x2^2 + x2^2*x3^8 + x1^8*x3^2 + x2^8*x3^2"
        " - x1^4*x2^6 - x1^4*x3^6 - x1^6*x2^4 - x2^4*x3^6 - x1^6*x3^4 - x2^6*x3^4");
}

inline std::vector<CircuitPolynomialData> twelve_term_pieces() {
    auto piece = [](std::vector<int> hi, std::vector<int> lo, std::vector<int> mid, long wh, long wl) {
        return make_circuit_polynomial({{E(std::move(hi)), Q(wh, 3)}, {E(std::move(lo)), Q(wl, 3)}},
                                       {E(std::move(mid)), Q(-1)});
    };
    return {
        piece({0, 2, 8}, {0, 8, 2}, {0, 4, 6}, 2, 1),
        piece({0, 2, 8}, {0, 8, 2}, {0, 6, 4}, 1, 2),
        piece({2, 0, 8}, {8, 0, 2}, {4, 0, 6}, 2, 1),
        piece({2, 0, 8}, {8, 0, 2}, {6, 0, 4}, 1, 2),
        piece({2, 8, 0}, {8, 2, 0}, {4, 6, 0}, 2, 1),
        piece({2, 8, 0}, {8, 2, 0}, {6, 4, 0}, 1, 2),
    };
}

// f = 1/2 x1^4 + 1/2 x2^4 x3^4 + 1/4 x2^4 x3^8 - x1 x2 x3 - x1 x2^2 x3^3 + 3/4
inline SparsePolynomial quartic_example_f() {
    return parse_polynomial("1/2*x1^4 + 1/2*x2^4*x3^4 + 1/4*x2^4*x3^8 - x1*x2*x3 - x1*x2^2*x3^3 + 3/4");
}

inline CircuitPolynomialData quartic_piece_111() {
    return make_circuit_polynomial(
        {{E({4, 0, 0}), Q(1, 4)}, {E({0, 4, 4}), Q(1, 4)}, {E({0, 0, 0}), Q(1, 2)}},
        {E({1, 1, 1}), Q(-1)});
}

inline CircuitPolynomialData quartic_piece_123() {
    return make_circuit_polynomial({{E({4, 0, 0}), Q(1, 4)},
                                    {E({0, 4, 4}), Q(1, 4)},
                                    {E({0, 4, 8}), Q(1, 4)},
                                    {E({0, 0, 0}), Q(1, 4)}},
                                   {E({1, 2, 3}), Q(-1)});
}

// Degree-14 simplex family: full even simplex with the (4,2,2) orbit and the
// center (4,4,4) as inner points, coefficients at the barycentric split.
inline CircuitPolynomialData deg14_piece_422() {
    return make_circuit_polynomial({{E({0, 0, 0}), Q(3, 7)},
                                    {E({14, 0, 0}), Q(2, 7)},
                                    {E({0, 14, 0}), Q(1, 7)},
                                    {E({0, 0, 14}), Q(1, 7)}},
                                   {E({4, 2, 2}), Q(-1)});
}

inline CircuitPolynomialData deg14_piece_444() {
    return make_circuit_polynomial({{E({0, 0, 0}), Q(1, 7)},
                                    {E({14, 0, 0}), Q(2, 7)},
                                    {E({0, 14, 0}), Q(2, 7)},
                                    {E({0, 0, 14}), Q(2, 7)}},
                                   {E({4, 4, 4}), Q(-1)});
}

inline SymmetricSoncCertificate deg14_symmetric_certificate() {
    SymmetricSoncCertificate cert;
    cert.nvars = 3;
    cert.mode = SymmetrizeMode::GroupSum;
    cert.orbit_pieces = {deg14_piece_422(), deg14_piece_444()};
    return cert;
}

inline SparsePolynomial deg14_symmetric_poly() {
    const auto cert = deg14_symmetric_certificate();
    SparsePolynomial acc(3);
    for (const auto& piece : cert.orbit_pieces) {
        acc = combine(acc, symmetrize(circuit_to_polynomial(piece, 3), SymmetrizeMode::GroupSum), Q(1), Q(1));
    }
    return acc;
}

// xorshift-style generator: stable across standard libraries, unlike the
// std distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed * 0x9e3779b97f4a7c15ULL + 0x853c49e6748fea9bULL) {}

    std::uint64_t next() {
        state_ ^= state_ << 13U;
        state_ ^= state_ >> 7U;
        state_ ^= state_ << 17U;
        return state_;
    }
    int range(int lo, int hi) { // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    double real01() { return static_cast<double>(next() >> 11U) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

} // namespace sonc::testing

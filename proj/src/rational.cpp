#include "rational.hpp"

#include "errors.hpp"

#include <cctype>
#include <cmath>

namespace sonc {

Rational rational_from_string(const std::string& text) {
    std::size_t i = 0;
    auto bad = [&](const std::string& why) { fail(ErrorCode::ParseError, "invalid rational '" + text + "': " + why); };
    if (text.empty()) bad("empty");
    if (text[i] == '-' || text[i] == '+') ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) { ++i; ++digits; }
    if (digits == 0) bad("missing numerator digits");
    if (i < text.size()) {
        if (text[i] != '/') bad("unexpected character");
        ++i;
        std::size_t den_digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) { ++i; ++den_digits; }
        if (den_digits == 0 || i != text.size()) bad("malformed denominator");
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) bad("not a rational");
    if (sgn(Rational(q.get_den())) == 0) bad("zero denominator");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

Rational rational_pow(const Rational& base, unsigned long exponent) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), exponent);
    out.canonicalize();
    return out;
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) fail(ErrorCode::InvalidArgument, "non-finite double has no rational value");
    Rational q;
    mpq_set_d(q.get_mpq_t(), value);
    return q;
}

Rational limit_denominator(const Rational& value, unsigned long max_denominator) {
    if (max_denominator < 1) fail(ErrorCode::InvalidArgument, "max_denominator must be >= 1");
    if (value.get_den() <= max_denominator) return value;

    // Stern-Brocot style convergents p/q of the continued fraction.
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Integer n = value.get_num(), d = value.get_den();
    Integer bound(static_cast<unsigned long>(max_denominator));
    while (true) {
        Integer a = n / d; // floor for positive d; n may be negative -> use fdiv
        Integer af;
        mpz_fdiv_q(af.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        a = af;
        Integer q2 = q0 + a * q1;
        if (q2 > bound) break;
        Integer p2 = p0 + a * p1;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        Integer r = n - a * d;
        n = d; d = r;
        if (d == 0) break;
    }
    Integer k = (bound - q0) / q1;
    Rational bound1(p0 + k * p1, q0 + k * q1);
    bound1.canonicalize();
    Rational bound2(p1, q1);
    bound2.canonicalize();
    return abs(bound2 - value) <= abs(bound1 - value) ? bound2 : bound1;
}

Rational limit_denominator(double value, unsigned long max_denominator) {
    return limit_denominator(rational_from_double(value), max_denominator);
}

std::optional<Rational> exact_root(const Rational& value, unsigned long degree) {
    if (degree == 0) fail(ErrorCode::InvalidArgument, "zeroth root");
    if (sgn(value) < 0) return std::nullopt;
    Integer num_root, den_root;
    int num_exact = mpz_root(num_root.get_mpz_t(), value.get_num().get_mpz_t(), degree);
    if (!num_exact) return std::nullopt;
    int den_exact = mpz_root(den_root.get_mpz_t(), value.get_den().get_mpz_t(), degree);
    if (!den_exact) return std::nullopt;
    Rational out(num_root, den_root);
    out.canonicalize();
    return out;
}

std::uint64_t factorial_u64(int n) {
    if (n < 0) fail(ErrorCode::InvalidArgument, "negative factorial");
    if (n > 20) fail(ErrorCode::DimensionTooLarge, "factorial exceeds 64 bits for n > 20");
    std::uint64_t out = 1;
    for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
    return out;
}

} // namespace sonc

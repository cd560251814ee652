#include "exponent.hpp"

#include "errors.hpp"

#include <algorithm>
#include <numeric>

namespace sonc {

Exponent::Exponent(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
        if (e < 0) fail(ErrorCode::NegativeExponent, "exponent entries must be nonnegative");
    }
}

Exponent Exponent::zero(int nvars) {
    return Exponent(std::vector<int>(static_cast<std::size_t>(nvars), 0));
}

long Exponent::degree() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

bool Exponent::all_even() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e % 2 == 0; });
}

bool Exponent::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

Exponent Exponent::sorted_desc() const {
    std::vector<int> s = entries_;
    std::sort(s.begin(), s.end(), std::greater<int>());
    return Exponent(std::move(s));
}

bool lex_less(const Exponent& a, const Exponent& b) {
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                        b.entries().begin(), b.entries().end());
}

bool graded_lex_less(const Exponent& a, const Exponent& b) {
    long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return lex_less(a, b);
}

} // namespace sonc

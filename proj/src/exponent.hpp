#pragma once

#include <compare>
#include <vector>

namespace sonc {

// A lattice exponent vector in a fixed number of variables.
// Entries are nonnegative; the ambient dimension is fixed per polynomial.
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(std::vector<int> entries);
    static Exponent zero(int nvars);

    int dim() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    long degree() const;
    bool all_even() const;
    bool is_zero() const;
    Exponent sorted_desc() const;

    friend bool operator==(const Exponent& a, const Exponent& b) { return a.entries_ == b.entries_; }

private:
    std::vector<int> entries_;
};

bool lex_less(const Exponent& a, const Exponent& b);
// Graded lexicographic: lower total degree first, then lexicographic.
bool graded_lex_less(const Exponent& a, const Exponent& b);

struct GradedLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const { return graded_lex_less(a, b); }
};

struct LexLess {
    bool operator()(const Exponent& a, const Exponent& b) const { return lex_less(a, b); }
};

} // namespace sonc

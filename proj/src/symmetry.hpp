#pragma once

// Symmetric-group machinery: permutation action on exponents and polynomials,
// orbit enumeration as distinct multiset permutations, symmetrization.

#include "poly.hpp"

#include <cstdint>
#include <vector>

namespace sonc {

// A permutation sigma of {1..n}; acting on an exponent by
// sigma(e)_i = e_{sigma(i)}.
class Permutation {
public:
    Permutation() = default;
    static Permutation identity(int n);
    // image[i] = sigma(i+1), 1-based values.
    static Permutation from_one_based(const std::vector<int>& image);
    static Permutation transposition(int n, int i, int j); // 1-based positions

    int size() const { return static_cast<int>(image_.size()); }
    // 0-based: the source index that lands in slot i.
    int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
    std::vector<int> one_based_image() const;

    Exponent apply(const Exponent& e) const;

    // Composition such that then(tau).apply(e) == tau.apply(this->apply(e)).
    Permutation then(const Permutation& tau) const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.image_ == b.image_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.image_ < b.image_; }

private:
    std::vector<int> image_; // 0-based
};

// All n! permutations in lexicographic order of their image sequences.
std::vector<Permutation> all_permutations(int n);

struct Orbit {
    Exponent representative;        // weakly decreasing sort
    std::vector<Exponent> elements; // distinct, lexicographically ascending
    std::uint64_t size = 0;         // == elements.size() == n!/prod(multiplicities!)
};

Orbit orbit(const Exponent& alpha);
std::uint64_t orbit_size(const Exponent& alpha);

SparsePolynomial apply_permutation(const Permutation& sigma, const SparsePolynomial& p);

enum class SymmetrizeMode { GroupSum, OrbitSum };

// GroupSum: sum over all n! permutations (stabilized terms pick up
// multiplicity n!/orbit size). OrbitSum: each distinct permuted monomial once
// with the originating coefficient.
SparsePolynomial symmetrize(const SparsePolynomial& p, SymmetrizeMode mode);

bool is_symmetric(const SparsePolynomial& p);

// Partition of the symmetric closure of `support` into orbits, ordered by
// graded-lex representative.
std::vector<Orbit> orbit_decompose_support(const std::vector<Exponent>& support);

nlohmann::json orbit_to_json(const Orbit& o);

} // namespace sonc

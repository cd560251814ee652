#include "symmetry.hpp"

#include "errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sonc {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.image_.resize(static_cast<std::size_t>(n));
    std::iota(p.image_.begin(), p.image_.end(), 0);
    return p;
}

Permutation Permutation::from_one_based(const std::vector<int>& image) {
    const int n = static_cast<int>(image.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    Permutation p;
    p.image_.reserve(image.size());
    for (int v : image) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            fail(ErrorCode::InvalidArgument, "image is not a permutation of 1..n");
        seen[static_cast<std::size_t>(v - 1)] = true;
        p.image_.push_back(v - 1);
    }
    return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n) fail(ErrorCode::InvalidArgument, "transposition out of range");
    Permutation p = identity(n);
    std::swap(p.image_[static_cast<std::size_t>(i - 1)], p.image_[static_cast<std::size_t>(j - 1)]);
    return p;
}

std::vector<int> Permutation::one_based_image() const {
    std::vector<int> out;
    out.reserve(image_.size());
    for (int v : image_) out.push_back(v + 1);
    return out;
}

Exponent Permutation::apply(const Exponent& e) const {
    if (e.dim() != size()) fail(ErrorCode::DimensionMismatch, "permutation and exponent dimensions differ");
    std::vector<int> out(static_cast<std::size_t>(size()));
    for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(i)] = e[image_[static_cast<std::size_t>(i)]];
    return Exponent(std::move(out));
}

Permutation Permutation::then(const Permutation& tau) const {
    if (tau.size() != size()) fail(ErrorCode::DimensionMismatch, "composition of unequal sizes");
    // tau.apply(this->apply(e))_i = this->apply(e)_{tau(i)} = e_{this(tau(i))}
    Permutation out;
    out.image_.resize(static_cast<std::size_t>(size()));
    for (int i = 0; i < size(); ++i)
        out.image_[static_cast<std::size_t>(i)] = image_[static_cast<std::size_t>(tau.image_[static_cast<std::size_t>(i)])];
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    if (n > 8) fail(ErrorCode::DimensionTooLarge, "full symmetric-group enumeration is capped at n = 8");
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_based(image));
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

std::uint64_t orbit_size(const Exponent& alpha) {
    const int n = alpha.dim();
    std::map<int, int> multiplicity;
    for (int i = 0; i < n; ++i) ++multiplicity[alpha[i]];
    std::uint64_t size = factorial_u64(n);
    for (const auto& [value, count] : multiplicity) size /= factorial_u64(count);
    return size;
}

Orbit orbit(const Exponent& alpha) {
    Orbit o;
    o.representative = alpha.sorted_desc();
    std::vector<int> e = alpha.entries();
    std::sort(e.begin(), e.end());
    do {
        o.elements.emplace_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    o.size = orbit_size(alpha);
    if (o.size != o.elements.size()) fail(ErrorCode::Internal, "orbit size formula mismatch");
    return o;
}

SparsePolynomial apply_permutation(const Permutation& sigma, const SparsePolynomial& p) {
    if (sigma.size() != p.nvars()) fail(ErrorCode::DimensionMismatch, "permutation size differs from variable count");
    std::vector<PolyTerm> terms;
    terms.reserve(p.term_count());
    for (const auto& [exp, coef] : p.terms()) terms.push_back({sigma.apply(exp), coef});
    return SparsePolynomial::from_terms(p.nvars(), terms);
}

SparsePolynomial symmetrize(const SparsePolynomial& p, SymmetrizeMode mode) {
    const int n = p.nvars();
    const std::uint64_t group = factorial_u64(n);
    std::vector<PolyTerm> terms;
    for (const auto& [exp, coef] : p.terms()) {
        Orbit o = orbit(exp);
        Rational factor = mode == SymmetrizeMode::GroupSum
                              ? Rational(Integer(static_cast<unsigned long>(group / o.size)))
                              : Rational(1);
        for (const auto& element : o.elements) terms.push_back({element, coef * factor});
    }
    return SparsePolynomial::from_terms(n, terms);
}

bool is_symmetric(const SparsePolynomial& p) {
    const int n = p.nvars();
    for (int i = 1; i < n; ++i) {
        if (apply_permutation(Permutation::transposition(n, i, i + 1), p) != p) return false;
    }
    return true;
}

std::vector<Orbit> orbit_decompose_support(const std::vector<Exponent>& support) {
    std::map<Exponent, Orbit, GradedLexLess> by_rep;
    for (const auto& e : support) {
        Exponent rep = e.sorted_desc();
        if (!by_rep.count(rep)) by_rep.emplace(rep, orbit(e));
    }
    std::vector<Orbit> out;
    out.reserve(by_rep.size());
    for (auto& [rep, o] : by_rep) out.push_back(std::move(o));
    return out;
}

nlohmann::json orbit_to_json(const Orbit& o) {
    nlohmann::json elements = nlohmann::json::array();
    for (const auto& e : o.elements) elements.push_back(exponent_to_json(e));
    return {{"representative", exponent_to_json(o.representative)},
            {"size", o.size},
            {"elements", elements}};
}

} // namespace sonc

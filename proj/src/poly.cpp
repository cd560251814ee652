#include "poly.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace sonc {

SparsePolynomial SparsePolynomial::from_terms(int nvars, const std::vector<PolyTerm>& terms) {
    SparsePolynomial p(nvars);
    for (const auto& t : terms) {
        if (t.exp.dim() != nvars)
            fail(ErrorCode::DimensionMismatch, "term exponent has wrong dimension");
        if (sgn(t.coef) == 0) continue;
        auto [it, inserted] = p.terms_.emplace(t.exp, t.coef);
        if (!inserted) {
            it->second += t.coef;
            it->second.canonicalize();
            if (sgn(it->second) == 0) p.terms_.erase(it);
        }
    }
    return p;
}

Rational SparsePolynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

class TextCursor {
public:
    explicit TextCursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char take() {
        skip_ws();
        return text_[pos_++];
    }
    std::size_t pos() const { return pos_; }

    [[noreturn]] void error(const std::string& why) const {
        fail(ErrorCode::ParseError, why + " at position " + std::to_string(pos_));
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) error("expected an integer");
        return Integer(text_.substr(start, pos_ - start));
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

struct RawTerm {
    Rational coef;
    std::map<int, int> powers; // 1-based variable index -> exponent
};

// term := [rational ('*')?] monomial?
RawTerm parse_term(TextCursor& cur) {
    RawTerm term;
    term.coef = 1;
    bool saw_anything = false;

    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        Integer num = cur.integer();
        Integer den = 1;
        if (cur.peek() == '/') {
            cur.take();
            den = cur.integer();
            if (den == 0) cur.error("zero denominator");
        }
        term.coef = Rational(num, den);
        term.coef.canonicalize();
        saw_anything = true;
        if (cur.peek() == '*') cur.take();
    }

    while (cur.peek() == 'x') {
        cur.take();
        Integer idx = cur.integer();
        if (idx < 1 || idx > 1024) cur.error("variable index out of range");
        int var = static_cast<int>(idx.get_si());
        int power = 1;
        if (cur.peek() == '^') {
            cur.take();
            bool negative = false;
            if (cur.peek() == '-') { cur.take(); negative = true; }
            Integer e = cur.integer();
            if (negative) fail(ErrorCode::NegativeExponent, "negative exponent in term");
            if (e > 100000) cur.error("exponent too large");
            power = static_cast<int>(e.get_si());
        }
        term.powers[var] += power;
        saw_anything = true;
        if (cur.peek() == '*') {
            cur.take();
            if (cur.peek() != 'x') cur.error("expected a variable after '*'");
        } else {
            break;
        }
    }

    if (!saw_anything) cur.error("expected a term");
    return term;
}

} // namespace

SparsePolynomial parse_polynomial(const std::string& text, std::optional<int> declared_nvars) {
    TextCursor cur(text);
    struct Signed {
        int sign;
        RawTerm term;
    };
    std::vector<Signed> raw;

    int sign = 1;
    if (cur.peek() == '-') { cur.take(); sign = -1; }
    else if (cur.peek() == '+') { cur.take(); }
    raw.push_back({sign, parse_term(cur)});
    while (!cur.done()) {
        char op = cur.take();
        if (op == '+') sign = 1;
        else if (op == '-') sign = -1;
        else cur.error("expected '+' or '-'");
        raw.push_back({sign, parse_term(cur)});
    }

    int max_index = 0;
    for (const auto& s : raw) {
        for (const auto& [var, power] : s.term.powers) {
            if (power > 0) max_index = std::max(max_index, var);
        }
    }
    int nvars = max_index;
    if (declared_nvars) {
        if (*declared_nvars < max_index)
            fail(ErrorCode::DimensionMismatch,
                 "declared variable count " + std::to_string(*declared_nvars) +
                     " is inconsistent with highest variable x" + std::to_string(max_index));
        nvars = *declared_nvars;
    }

    std::vector<PolyTerm> terms;
    terms.reserve(raw.size());
    for (auto& s : raw) {
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        for (const auto& [var, power] : s.term.powers) e[static_cast<std::size_t>(var - 1)] += power;
        Rational c = s.term.coef * s.sign;
        c.canonicalize();
        terms.push_back({Exponent(std::move(e)), std::move(c)});
    }
    return SparsePolynomial::from_terms(nvars, terms);
}

namespace {

std::string format_monomial(const Exponent& e) {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < e.dim(); ++i) {
        if (e[i] == 0) continue;
        if (!first) out << "*";
        out << "x" << (i + 1);
        if (e[i] != 1) out << "^" << e[i];
        first = false;
    }
    return out.str();
}

} // namespace

std::string format_polynomial(const SparsePolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest graded-lex terms first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [exp, coef] = *it;
        const bool negative = sgn(coef) < 0;
        Rational mag = abs(coef);
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::string mono = format_monomial(exp);
        if (mono.empty()) {
            out << rational_to_string(mag);
        } else if (mag == 1) {
            out << mono;
        } else {
            out << rational_to_string(mag) << "*" << mono;
        }
    }
    return out.str();
}

namespace {

double ipow(double base, long e) {
    double out = 1.0;
    double b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1UL) out *= b;
        b *= b;
        n >>= 1UL;
    }
    return out;
}

} // namespace

double evaluate(const SparsePolynomial& p, std::span<const double> point) {
    if (static_cast<int>(point.size()) != p.nvars())
        fail(ErrorCode::DimensionMismatch, "evaluation point has wrong dimension");
    double acc = 0.0;
    for (const auto& [exp, coef] : p.terms()) {
        double mono = 1.0;
        for (int i = 0; i < exp.dim(); ++i) {
            if (exp[i] != 0) mono *= ipow(point[static_cast<std::size_t>(i)], exp[i]);
        }
        acc += coef.get_d() * mono;
    }
    return acc;
}

Rational evaluate_exact(const SparsePolynomial& p, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != p.nvars())
        fail(ErrorCode::DimensionMismatch, "evaluation point has wrong dimension");
    Rational acc(0);
    for (const auto& [exp, coef] : p.terms()) {
        Rational mono(1);
        for (int i = 0; i < exp.dim(); ++i) {
            if (exp[i] != 0) mono *= rational_pow(point[static_cast<std::size_t>(i)], static_cast<unsigned long>(exp[i]));
        }
        acc += coef * mono;
    }
    acc.canonicalize();
    return acc;
}

SparsePolynomial combine(const SparsePolynomial& p, const SparsePolynomial& q,
                         const Rational& a, const Rational& b) {
    if (p.nvars() != q.nvars())
        fail(ErrorCode::DimensionMismatch, "combining polynomials in different variable counts");
    std::vector<PolyTerm> terms;
    terms.reserve(p.term_count() + q.term_count());
    for (const auto& [exp, coef] : p.terms()) terms.push_back({exp, a * coef});
    for (const auto& [exp, coef] : q.terms()) terms.push_back({exp, b * coef});
    return SparsePolynomial::from_terms(p.nvars(), terms);
}

SignedSupport signed_partition(const SparsePolynomial& p) {
    SignedSupport s;
    for (const auto& [exp, coef] : p.terms()) {
        if (exp.all_even() && sgn(coef) > 0) s.a_plus.insert(exp);
        else s.a_minus.insert(exp);
    }
    return s;
}

nlohmann::json exponent_to_json(const Exponent& e) {
    return nlohmann::json(e.entries());
}

Exponent exponent_from_json(const nlohmann::json& j) {
    if (!j.is_array()) fail(ErrorCode::ParseError, "exponent must be a JSON array");
    std::vector<int> entries;
    entries.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer()) fail(ErrorCode::ParseError, "exponent entries must be integers");
        int e = v.get<int>();
        if (e < 0) fail(ErrorCode::NegativeExponent, "exponent entries must be nonnegative");
        entries.push_back(e);
    }
    return Exponent(std::move(entries));
}

nlohmann::json polynomial_to_json(const SparsePolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        terms.push_back({{"exp", exponent_to_json(it->first)}, {"coef", rational_to_string(it->second)}});
    }
    return {{"n", p.nvars()}, {"terms", terms}};
}

SparsePolynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        fail(ErrorCode::ParseError, "polynomial JSON must have 'n' and 'terms'");
    int nvars = j.at("n").get<int>();
    if (nvars < 0) fail(ErrorCode::ParseError, "'n' must be nonnegative");
    std::vector<PolyTerm> terms;
    for (const auto& t : j.at("terms")) {
        Exponent e = exponent_from_json(t.at("exp"));
        if (e.dim() != nvars) fail(ErrorCode::DimensionMismatch, "term exponent length differs from 'n'");
        terms.push_back({std::move(e), rational_from_string(t.at("coef").get<std::string>())});
    }
    return SparsePolynomial::from_terms(nvars, terms);
}

} // namespace sonc

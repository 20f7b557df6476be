/**
 * @file symspace.hpp
 * @brief Subspaces of Sym^m(Q^2) cut out by divisibility by powers of lines.
 *
 * Sym^m of the plane is identified with binary forms of degree m. A word
 * (m; (V_1, c_1), ..., (V_q, c_q); twist) names the subspace of forms divisible
 * by l_1^{c_1} ... l_q^{c_q}, l_i the linear form of V_i, tensored with a
 * one-dimensional factor that is carried only as a multidegree tag.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tvb/bundle.hpp"
#include "tvb/exactalg.hpp"

namespace tvb {

/// Homogeneous binary form of degree m; coefficient i multiplies x^i y^(m-i).
struct BinaryForm {
    std::size_t degree = 0;
    std::vector<Rational> coefficients;

    BinaryForm() : coefficients(1) {}
    BinaryForm(std::size_t deg, std::vector<Rational> coeffs) : degree(deg), coefficients(std::move(coeffs)) {
        if (coefficients.size() != degree + 1) throw Error("binary form of degree m needs m + 1 coefficients");
    }

    static BinaryForm from_integers(const IntVector& coeffs) {
        if (coeffs.empty()) throw Error("binary form needs at least one coefficient");
        std::vector<Rational> c(coeffs.begin(), coeffs.end());
        return BinaryForm(coeffs.size() - 1, std::move(c));
    }

    /// Coefficient vector scaled to coprime integers (sign kept).
    IntVector integer_coefficients() const {
        Int den = 1;
        for (const Rational& c : coefficients) den = lcm(den, boost::multiprecision::denominator(c));
        IntVector out(coefficients.size());
        for (std::size_t i = 0; i < coefficients.size(); ++i)
            out[i] = boost::multiprecision::numerator(coefficients[i]) * (den / boost::multiprecision::denominator(coefficients[i]));
        if (is_zero(out)) return out;
        return primitive(out);
    }

    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

/// Coefficient-vector product of two binary forms given as integer arrays.
inline IntVector multiply_coefficients(const IntVector& f, const IntVector& g) {
    IntVector h(f.size() + g.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g[j] != 0) h[i + j] += f[i] * g[j];
    }
    return h;
}

inline BinaryForm multiply(const BinaryForm& f, const BinaryForm& g) {
    std::vector<Rational> h(f.degree + g.degree + 1);
    for (std::size_t i = 0; i <= f.degree; ++i)
        for (std::size_t j = 0; j <= g.degree; ++j) h[i + j] += f.coefficients[i] * g.coefficients[j];
    return BinaryForm(f.degree + g.degree, std::move(h));
}

/// Renders e.g. "x^2 - 1/2*x*y + y^2".
inline std::string to_string(const BinaryForm& f) {
    std::string out;
    for (std::size_t k = 0; k <= f.degree; ++k) {
        const std::size_t i = f.degree - k;  // descending powers of x
        const Rational& c = f.coefficients[i];
        if (c == 0) continue;
        const std::size_t yexp = f.degree - i;
        std::string mono;
        if (i > 0) mono += (i == 1) ? "x" : "x^" + std::to_string(i);
        if (yexp > 0) mono += std::string(mono.empty() ? "" : "*") + ((yexp == 1) ? "y" : "y^" + std::to_string(yexp));
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        std::string term;
        if (mono.empty())
            term = to_string(mag);
        else if (mag == 1)
            term = mono;
        else
            term = to_string(mag) + "*" + mono;
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += negative ? " - " + term : " + " + term;
    }
    return out.empty() ? "0" : out;
}

/// Sym^m_E(V_1^{c_1}, ..., V_q^{c_q}) (x) L_twist, or the distinguished ZERO word.
class SymWord {
public:
    using Factor = std::pair<Line, Int>;

    static SymWord zero() {
        SymWord w;
        w.zero_ = true;
        return w;
    }

    /// Factors are sorted by line; zero exponents are dropped. Repeated lines
    /// and negative exponents are rejected.
    SymWord(Int m, std::vector<Factor> factors, IntVector twist)
        : m_(std::move(m)), factors_(std::move(factors)), twist_(std::move(twist)) {
        std::erase_if(factors_, [](const Factor& f) { return f.second == 0; });
        for (const Factor& f : factors_)
            if (f.second < 0) throw Error("negative exponent on line " + f.first.str());
        std::sort(factors_.begin(), factors_.end(),
                  [](const Factor& a, const Factor& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < factors_.size(); ++i)
            if (factors_[i].first == factors_[i - 1].first)
                throw Error("line " + factors_[i].first.str() + " repeated in word");
    }

    bool is_zero() const { return zero_; }
    const Int& m() const { return m_; }
    const std::vector<Factor>& factors() const { return factors_; }
    const IntVector& twist() const { return twist_; }

    Int exponent_sum() const {
        Int s = 0;
        for (const Factor& f : factors_) s += f.second;
        return s;
    }

    Int exponent_of(const Line& l) const {
        for (const Factor& f : factors_)
            if (f.first == l) return f.second;
        return 0;
    }

    std::string str() const {
        if (zero_) return "ZERO";
        std::string s = "Sym^" + m_.str() + "(";
        for (std::size_t i = 0; i < factors_.size(); ++i)
            s += (i ? ", " : "") + factors_[i].first.str() + "^" + factors_[i].second.str();
        return s + ") (x) L" + to_string(twist_);
    }

    friend bool operator==(const SymWord& a, const SymWord& b) {
        if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
        return a.m_ == b.m_ && a.factors_ == b.factors_ && a.twist_ == b.twist_;
    }

private:
    SymWord() = default;

    bool zero_ = false;
    Int m_ = 0;
    std::vector<Factor> factors_;
    IntVector twist_;
};

inline Int dim_word(const SymWord& w) {
    if (w.is_zero()) return 0;
    const Int s = w.exponent_sum();
    if (w.m() < s) return 0;
    return w.m() + 1 - s;
}

/// Integer coefficients of the product of l_i^{c_i} over the word's factors.
inline IntVector divisor_coefficients(const SymWord& w) {
    IntVector poly{1};
    for (const auto& [line, exp] : w.factors()) {
        const IntVector lin{line.q(), line.p()};  // q*y + p*x
        for (Int k = 0; k < exp; ++k) poly = multiply_coefficients(poly, lin);
    }
    return poly;
}

/// Integer coefficient vectors of basis_word (same order).
inline std::vector<IntVector> basis_coefficients(const SymWord& w) {
    const Int dim = dim_word(w);
    if (dim == 0) throw Error("zero-dimensional word has no basis: " + w.str());
    const std::size_t m = static_cast<std::size_t>(w.m());
    const IntVector div = divisor_coefficients(w);
    std::vector<IntVector> out;
    for (std::size_t s = 0; s < static_cast<std::size_t>(dim); ++s) {
        IntVector f(m + 1);
        for (std::size_t i = 0; i < div.size(); ++i) f[i + s] = div[i];
        out.push_back(std::move(f));
    }
    return out;
}

/// The forms (prod l_i^{c_i}) * x^s * y^(m - sum c - s), s ascending.
inline std::vector<BinaryForm> basis_word(const SymWord& w) {
    std::vector<BinaryForm> out;
    for (const IntVector& c : basis_coefficients(w)) out.push_back(BinaryForm::from_integers(c));
    return out;
}

inline SymWord multiply_words(const SymWord& w1, const SymWord& w2) {
    if (w1.is_zero() || w2.is_zero()) return SymWord::zero();
    if (w1.exponent_sum() > w1.m() || w2.exponent_sum() > w2.m())
        throw Error("multiplication hypotheses unmet: exponent sum exceeds the symmetric power");
    if (w1.twist().size() != w2.twist().size()) throw Error("twist lengths differ");
    std::vector<SymWord::Factor> merged = w1.factors();
    for (const auto& [line, exp] : w2.factors()) {
        auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& f) { return f.first == line; });
        if (it == merged.end())
            merged.emplace_back(line, exp);
        else
            it->second += exp;
    }
    return SymWord(w1.m() + w2.m(), std::move(merged), add(w1.twist(), w2.twist()));
}

namespace detail {

inline void require_common_degree(const std::vector<SymWord>& words) {
    if (words.empty()) throw Error("intersection of an empty family of words");
    const SymWord* ref = nullptr;
    for (const SymWord& w : words) {
        if (w.is_zero()) continue;
        if (!ref) {
            ref = &w;
            continue;
        }
        if (w.m() != ref->m()) throw Error("words to intersect have different symmetric powers");
        if (w.twist() != ref->twist()) throw Error("words to intersect have different twists");
    }
}

}  // namespace detail

/// Exponent-wise maximum; ZERO when the exponents no longer fit in degree m.
inline SymWord intersect_words(const std::vector<SymWord>& words) {
    detail::require_common_degree(words);
    if (std::any_of(words.begin(), words.end(), [](const SymWord& w) { return w.is_zero(); }))
        return SymWord::zero();
    std::vector<SymWord::Factor> merged;
    for (const SymWord& w : words)
        for (const auto& [line, exp] : w.factors()) {
            auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& f) { return f.first == line; });
            if (it == merged.end())
                merged.emplace_back(line, exp);
            else
                it->second = std::max(it->second, exp);
        }
    SymWord out(words.front().m(), std::move(merged), words.front().twist());
    if (out.exponent_sum() > out.m()) return SymWord::zero();
    return out;
}

/// Dimension of the intersection computed by linear algebra on coefficient
/// vectors of basis_word, independent of the exponent bookkeeping above.
inline Int oracle_dim(const std::vector<SymWord>& words) {
    detail::require_common_degree(words);
    const SymWord* ref = nullptr;
    for (const SymWord& w : words)
        if (!w.is_zero()) ref = &w;
    if (!ref || ref->m() < 0) return 0;
    const std::size_t dim = static_cast<std::size_t>(ref->m()) + 1;
    std::vector<IntVector> span;
    bool first = true;
    for (const SymWord& w : words) {
        std::vector<IntVector> b;
        if (!w.is_zero() && dim_word(w) > 0)
            for (const BinaryForm& f : basis_word(w)) b.push_back(f.integer_coefficients());
        span = first ? b : intersect_spans(span, b, dim);
        first = false;
        if (span.empty()) return 0;
    }
    return static_cast<long long>(rank_of(span, dim));
}

}  // namespace tvb

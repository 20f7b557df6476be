/**
 * @file chambers.hpp
 * @brief Isotypical section spaces of Sym^m E (x) L^mvec and the cones Q_J on
 * which they have a fixed shape.
 *
 * Degrees g = (u, m, mvec) live in M x Z x Z^d. For each ray j the functional
 *
 *     lambda_j(u, m, mvec) = (<u, v_j> - a_j m - mvec_j) / (b_j - a_j)
 *
 * measures how deep the filtration of Sym^m E (x) L^mvec at ray j cuts into
 * the powers of the ray's line.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tvb/bundle.hpp"
#include "tvb/exactalg.hpp"
#include "tvb/symspace.hpp"

namespace tvb {

/// Multidegree (u, m, mvec) in M x Z x Z^d.
struct Degree {
    IntVector u;
    Int m;
    IntVector mvec;

    /// Flat coordinates (u, m, mvec), matching the chamber cone coordinates (x, w, w_1..w_d).
    IntVector flat() const {
        IntVector out = u;
        out.push_back(m);
        out.insert(out.end(), mvec.begin(), mvec.end());
        return out;
    }

    static Degree from_flat(const IntVector& x, std::size_t n) {
        if (x.size() < n + 1) throw Error("flat degree too short");
        Degree g;
        g.u.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
        g.m = x[n];
        g.mvec.assign(x.begin() + static_cast<std::ptrdiff_t>(n + 1), x.end());
        return g;
    }

    std::string str() const { return "(u=" + to_string(u) + ", m=" + m.str() + ", mvec=" + to_string(mvec) + ")"; }

    friend bool operator==(const Degree&, const Degree&) = default;
};

namespace detail {

inline void check_degree(const ToricBundle& tb, const Degree& g) {
    if (g.u.size() != tb.n() || g.mvec.size() != tb.d())
        throw Error("degree " + g.str() + " does not match lattice rank " + std::to_string(tb.n()) + " and " +
                    std::to_string(tb.d()) + " rays");
}

/// Numerator of lambda_j: <u, v_j> - a_j m - mvec_j.
inline Int lambda_numerator(const ToricBundle& tb, std::size_t j, const Degree& g) {
    const RayFiltration& r = tb.filtration(j);
    return dot(g.u, tb.fan().rays[j]) - r.a * g.m - g.mvec[j];
}

/// max(0, ceil(lambda_j(g))) without building a rational.
inline Int clamped_ceiling(const ToricBundle& tb, std::size_t j, const Degree& g) {
    const Int c = ceil_div(lambda_numerator(tb, j, g), tb.filtration(j).gap());
    return c > 0 ? c : Int(0);
}

/// Integer row L_j with L_j . (x, w, w_1..w_d) = (b_j - a_j) * lambda_j.
inline IntVector lambda_row(const ToricBundle& tb, std::size_t j) {
    IntVector row(tb.degree_dim());
    const IntVector& v = tb.fan().rays[j];
    for (std::size_t i = 0; i < tb.n(); ++i) row[i] = v[i];
    row[tb.n()] = -tb.filtration(j).a;
    row[tb.n() + 1 + j] = -1;
    return row;
}

}  // namespace detail

inline Rational lambda(const ToricBundle& tb, std::size_t j, const Degree& g) {
    if (j >= tb.d()) throw Error("ray index " + std::to_string(j) + " out of range");
    detail::check_degree(tb, g);
    return Rational(detail::lambda_numerator(tb, j, g), tb.filtration(j).gap());
}

/// max{0, ceil(lambda_j(g))}: the power of the ray's line the filtration step demands.
inline Int filtration_exponent(const ToricBundle& tb, std::size_t j, const Degree& g) {
    if (j >= tb.d()) throw Error("ray index " + std::to_string(j) + " out of range");
    detail::check_degree(tb, g);
    return detail::clamped_ceiling(tb, j, g);
}

/// The section space H^0(X, Sym^m E (x) L^mvec)_u, as a subspace of Sym^m E (x) L_mvec.
inline SymWord section_word(const ToricBundle& tb, const Degree& g) {
    detail::check_degree(tb, g);
    if (g.m < 0) return SymWord::zero();
    const RayClassification& cls = tb.classification();
    for (std::size_t j : cls.groups[0])
        if (detail::clamped_ceiling(tb, j, g) > 0) return SymWord::zero();
    std::vector<SymWord::Factor> factors;
    Int total = 0;
    for (std::size_t l = 1; l < cls.groups.size(); ++l) {
        Int c = 0;
        for (std::size_t j : cls.groups[l]) c = std::max(c, detail::clamped_ceiling(tb, j, g));
        if (c > 0) {
            total += c;
            if (total > g.m) return SymWord::zero();
            factors.emplace_back(cls.lines[l - 1], c);
        }
    }
    return SymWord(g.m, std::move(factors), g.mvec);
}

/// Q_J as an integer H-cone in the coordinates (x, w, w_1, ..., w_d).
struct Chamber {
    std::vector<std::size_t> J;
    HalfspaceCone cone;

    /// Canonical text: the index set, then one sorted inequality row per line.
    std::string str() const {
        std::string s = "J = {";
        for (std::size_t i = 0; i < J.size(); ++i) s += (i ? "," : "") + std::to_string(J[i]);
        s += "}\n";
        for (const IntVector& row : cone.inequalities()) {
            for (std::size_t i = 0; i < row.size(); ++i) s += (i ? " " : "") + row[i].str();
            s += "\n";
        }
        return s;
    }
};

inline std::string to_string(const std::vector<std::size_t>& j) {
    std::string s = "{";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + std::to_string(j[i]);
    return s + "}";
}

inline Chamber build_chamber(const ToricBundle& tb, const std::vector<std::size_t>& J) {
    const RayClassification& cls = tb.classification();
    if (!is_admissible_J(cls, J)) throw Error("index set " + to_string(J) + " is not admissible");
    const std::size_t dim = tb.degree_dim();
    const std::size_t w = tb.n();
    std::vector<IntVector> rows;

    IntVector w_row(dim);
    w_row[w] = 1;
    rows.push_back(w_row);  // w >= 0

    // sum_h lambda_{j_h} <= w, cleared by the lcm of the gaps involved.
    Int den = 1;
    for (std::size_t j : J) den = lcm(den, tb.filtration(j).gap());
    IntVector sum_row = scaled(w_row, den);
    for (std::size_t j : J) sum_row = subtract(sum_row, scaled(detail::lambda_row(tb, j), den / tb.filtration(j).gap()));
    rows.push_back(sum_row);

    std::vector<bool> covered(cls.groups.size(), false);
    for (std::size_t j : J) covered[cls.group_of[j]] = true;
    for (std::size_t j = 0; j < tb.d(); ++j)
        if (!covered[cls.group_of[j]]) rows.push_back(negated(detail::lambda_row(tb, j)));  // lambda_j <= 0

    for (std::size_t jh : J) {
        const IntVector lh = detail::lambda_row(tb, jh);
        rows.push_back(lh);  // lambda_{j_h} >= 0
        for (std::size_t j : cls.groups[cls.group_of[jh]]) {
            if (j == jh) continue;
            // lambda_{j_h} >= lambda_j, times gap(j_h) * gap(j)
            rows.push_back(subtract(scaled(lh, tb.filtration(j).gap()),
                                    scaled(detail::lambda_row(tb, j), tb.filtration(jh).gap())));
        }
    }

    std::vector<IntVector> clean;
    for (const IntVector& r : rows)
        if (!is_zero(r)) clean.push_back(primitive(r));
    std::sort(clean.begin(), clean.end());
    clean.erase(std::unique(clean.begin(), clean.end()), clean.end());
    return Chamber{J, HalfspaceCone(dim, std::move(clean))};
}

/// A chamber containing g, for g with a nonzero section space. For each line
/// whose rays reach lambda >= 0 the ray of largest lambda is chosen, the
/// smallest index winning ties.
inline std::vector<std::size_t> find_chamber(const ToricBundle& tb, const Degree& g) {
    if (section_word(tb, g).is_zero())
        throw Error("no chamber guaranteed: degree " + g.str() + " has a zero section space");
    const RayClassification& cls = tb.classification();
    std::vector<std::size_t> J;
    for (std::size_t l = 1; l < cls.groups.size(); ++l) {
        std::optional<std::size_t> best;
        Rational best_value;
        for (std::size_t j : cls.groups[l]) {
            const Rational v = lambda(tb, j, g);
            if (!best || v > best_value) {
                best = j;
                best_value = v;
            }
        }
        if (best && best_value >= 0) J.push_back(*best);
    }
    std::sort(J.begin(), J.end());
    return J;
}

/// The word Sym^m(V_{l(j_1)}^{ceil lambda_{j_1}}, ...) (x) L_mvec over the rays of J;
/// equals section_word(g) whenever g lies in Q_J.
inline SymWord chamber_word(const ToricBundle& tb, const std::vector<std::size_t>& J, const Degree& g) {
    detail::check_degree(tb, g);
    if (g.m < 0) return SymWord::zero();
    const RayClassification& cls = tb.classification();
    std::vector<SymWord::Factor> factors;
    for (std::size_t j : J) factors.emplace_back(cls.lines[cls.group_of[j] - 1], ceil(lambda(tb, j, g)));
    SymWord w(g.m, std::move(factors), g.mvec);
    if (w.exponent_sum() > w.m()) return SymWord::zero();
    return w;
}

}  // namespace tvb

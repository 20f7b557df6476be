/**
 * @file bundle.hpp
 * @brief Rank-two toric vector bundles given by Klyachko filtration data.
 *
 * The fiber E is the plane Q^2. Each ray j carries a filtration
 *
 *     E(i) = E      for i <= a_j
 *     E(i) = line   for a_j < i <= b_j
 *     E(i) = 0      for i > b_j
 *
 * where the middle step is absent (b_j = a_j + 1) for rays without a line.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tvb/exactalg.hpp"
#include "tvb/fan.hpp"

namespace tvb {

/// One-dimensional subspace of Q^2 spanned by (p, q), stored canonically:
/// coprime coordinates, first nonzero coordinate positive.
class Line {
public:
    Line(Int p, Int q) {
        if (p == 0 && q == 0) throw Error("line coordinates (0, 0) do not span a line");
        const Int g = gcd(p, q);
        p /= g;
        q /= g;
        if (p < 0 || (p == 0 && q < 0)) {
            p = -p;
            q = -q;
        }
        p_ = std::move(p);
        q_ = std::move(q);
    }

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }

    std::string str() const { return "(" + p_.str() + ":" + q_.str() + ")"; }

    friend bool operator==(const Line&, const Line&) = default;
    friend bool operator<(const Line& a, const Line& b) {
        return a.p_ != b.p_ ? a.p_ < b.p_ : a.q_ < b.q_;
    }

private:
    Int p_;
    Int q_;
};

struct RayFiltration {
    Int a;
    Int b;
    std::optional<Line> line;

    Int gap() const { return b - a; }

    friend bool operator==(const RayFiltration&, const RayFiltration&) = default;
};

struct RankTwoBundle {
    std::vector<RayFiltration> filtrations;  ///< parallel to Fan::rays

    friend bool operator==(const RankTwoBundle&, const RankTwoBundle&) = default;
};

inline std::vector<std::string> validate_bundle(const Fan& f, const RankTwoBundle& e) {
    std::vector<std::string> out;
    if (e.filtrations.size() != f.rays.size())
        out.push_back("bundle has " + std::to_string(e.filtrations.size()) + " filtrations but the fan has " +
                      std::to_string(f.rays.size()) + " rays");
    for (std::size_t j = 0; j < e.filtrations.size(); ++j) {
        const RayFiltration& r = e.filtrations[j];
        if (r.b < r.a + 1) out.push_back("filtration " + std::to_string(j) + ": b must be at least a + 1");
        if (!r.line && r.b != r.a + 1)
            out.push_back("filtration " + std::to_string(j) + ": b must equal a + 1 when no line is given");
    }
    return out;
}

/// Rays grouped by the line of their filtration. Group 0 holds the lineless rays.
struct RayClassification {
    std::vector<Line> lines;                       ///< V_1..V_p in first-appearance order
    std::vector<std::vector<std::size_t>> groups;  ///< A_0..A_p, ascending ray indices
    std::vector<std::size_t> group_of;             ///< ray index -> group index

    std::size_t line_count() const { return lines.size(); }
};

inline RayClassification classify_rays(const RankTwoBundle& e) {
    RayClassification c;
    c.groups.emplace_back();
    c.group_of.resize(e.filtrations.size());
    for (std::size_t j = 0; j < e.filtrations.size(); ++j) {
        const auto& line = e.filtrations[j].line;
        if (!line) {
            c.groups[0].push_back(j);
            c.group_of[j] = 0;
            continue;
        }
        std::size_t l = 0;
        while (l < c.lines.size() && !(c.lines[l] == *line)) ++l;
        if (l == c.lines.size()) {
            c.lines.push_back(*line);
            c.groups.emplace_back();
        }
        c.groups[l + 1].push_back(j);
        c.group_of[j] = l + 1;
    }
    return c;
}

/// All J inside A_1 u ... u A_p meeting each A_l at most once. Group 1 varies
/// fastest; each J is sorted ascending.
inline std::vector<std::vector<std::size_t>> enumerate_J(const RayClassification& c) {
    const std::size_t p = c.line_count();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> digit(p, 0);  // 0 = none, k = k-th ray of A_l
    for (;;) {
        std::vector<std::size_t> j;
        for (std::size_t l = 0; l < p; ++l)
            if (digit[l] > 0) j.push_back(c.groups[l + 1][digit[l] - 1]);
        std::sort(j.begin(), j.end());
        out.push_back(std::move(j));
        std::size_t l = 0;
        while (l < p) {
            if (++digit[l] <= c.groups[l + 1].size()) break;
            digit[l] = 0;
            ++l;
        }
        if (l == p) break;
    }
    return out;
}

/// Whether J belongs to the family enumerated by enumerate_J.
inline bool is_admissible_J(const RayClassification& c, const std::vector<std::size_t>& j) {
    std::vector<bool> used(c.groups.size(), false);
    for (std::size_t idx = 0; idx < j.size(); ++idx) {
        if (j[idx] >= c.group_of.size()) return false;
        if (idx > 0 && j[idx] <= j[idx - 1]) return false;
        const std::size_t l = c.group_of[j[idx]];
        if (l == 0 || used[l]) return false;
        used[l] = true;
    }
    return true;
}

struct CompatibilityResult {
    bool compatible = true;
    std::optional<std::size_t> failing_cone;

    explicit operator bool() const { return compatible; }
};

namespace detail {

inline bool characters_exist(const std::vector<IntVector>& rays, const std::vector<Int>& values, std::size_t n) {
    if (rays.empty()) return true;
    return solve_integer_linear(IntMatrix::from_rows(rays, n), values).has_value();
}

/// Whether the filtrations on the rays of one cone admit a splitting into
/// character eigenlines. Rank two allows at most two distinct lines per cone.
inline bool cone_compatible(const Fan& f, const RankTwoBundle& e, const std::vector<std::size_t>& cone) {
    std::vector<Line> lines;
    for (std::size_t j : cone) {
        const auto& line = e.filtrations[j].line;
        if (line && std::find(lines.begin(), lines.end(), *line) == lines.end()) lines.push_back(*line);
    }
    if (lines.size() > 2) return false;

    std::vector<IntVector> rays;
    std::vector<Int> first, second;
    for (std::size_t j : cone) {
        const RayFiltration& r = e.filtrations[j];
        rays.push_back(f.rays[j]);
        if (!r.line) {
            first.push_back(r.a);
            second.push_back(r.a);
        } else if (*r.line == lines[0]) {
            first.push_back(r.b);
            second.push_back(r.a);
        } else {
            first.push_back(r.a);
            second.push_back(r.b);
        }
    }
    // With fewer than two lines the second summand is a complement that
    // imposes no line condition; the equations above already encode that.
    return characters_exist(rays, first, f.n) && characters_exist(rays, second, f.n);
}

}  // namespace detail

/// Checks the cone-by-cone splitting condition on every listed cone.
inline CompatibilityResult check_compatibility(const Fan& f, const RankTwoBundle& e) {
    if (!validate_bundle(f, e).empty()) throw Error("invalid bundle data");
    for (std::size_t c = 0; c < f.cones.size(); ++c)
        if (!detail::cone_compatible(f, e, f.cones[c])) return {false, c};
    return {};
}

/// A fan together with a compatible rank-two bundle on it. Construction
/// validates both and precomputes the ray classification; every downstream
/// computation takes one of these.
class ToricBundle {
public:
    ToricBundle(Fan fan, RankTwoBundle bundle) : fan_(std::move(fan)), bundle_(std::move(bundle)) {
        const auto fan_issues = validate_fan(fan_);
        if (!fan_issues.empty()) throw Error("invalid fan: " + fan_issues.front());
        const auto bundle_issues = validate_bundle(fan_, bundle_);
        if (!bundle_issues.empty()) throw Error("invalid bundle: " + bundle_issues.front());
        const CompatibilityResult r = check_compatibility(fan_, bundle_);
        if (!r) throw Error("incompatible bundle: filtrations admit no splitting on cone " +
                            std::to_string(*r.failing_cone));
        classification_ = classify_rays(bundle_);
    }

    const Fan& fan() const { return fan_; }
    const RankTwoBundle& bundle() const { return bundle_; }
    const RayClassification& classification() const { return classification_; }

    std::size_t n() const { return fan_.n; }
    std::size_t d() const { return fan_.rays.size(); }
    /// Dimension of the degree space M x Z x Z^d.
    std::size_t degree_dim() const { return n() + 1 + d(); }

    const RayFiltration& filtration(std::size_t j) const { return bundle_.filtrations.at(j); }

private:
    Fan fan_;
    RankTwoBundle bundle_;
    RayClassification classification_;
};

}  // namespace tvb

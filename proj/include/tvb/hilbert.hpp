/**
 * @file hilbert.hpp
 * @brief Semigroup generators of C ∩ c·Z^N for rational cones C.
 *
 * The cone is split into its lineality lattice and a pointed quotient. The
 * pointed part is triangulated (pulling triangulation over its extreme rays),
 * the lattice points of every fundamental parallelepiped are collected and
 * decomposable candidates are discarded. What remains is the Hilbert basis.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "tvb/bundle.hpp"
#include "tvb/double_description.hpp"
#include "tvb/exactalg.hpp"

namespace tvb {

struct SemigroupGens {
    Int scale = 1;
    std::vector<IntVector> lineality_gens;  ///< +b and -b for each lineality basis vector b
    std::vector<IntVector> pointed_gens;

    std::vector<IntVector> all() const {
        std::vector<IntVector> out = lineality_gens;
        out.insert(out.end(), pointed_gens.begin(), pointed_gens.end());
        return out;
    }
};

/// lcm of the filtration gaps b_j - a_j; 1 when there are no rays.
inline Int veronese_scale(const RankTwoBundle& e) {
    Int c = 1;
    for (const RayFiltration& r : e.filtrations) c = lcm(c, r.gap());
    return c;
}

namespace detail {

class PullingTriangulation {
public:
    PullingTriangulation(const std::vector<IntVector>& rays, const std::vector<IntVector>& rows, std::size_t dim)
        : rays_(rays), dim_(dim), tight_(rays.size(), std::vector<char>(rows.size())) {
        for (std::size_t i = 0; i < rays.size(); ++i)
            for (std::size_t k = 0; k < rows.size(); ++k) tight_[i][k] = dot(rows[k], rays[i]) == 0;
    }

    std::vector<std::vector<std::size_t>> run() {
        std::vector<std::size_t> all(rays_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        const std::size_t k = rank_of(rays_, dim_);
        if (k == 0) return {};
        return triangulate(all, k);
    }

private:
    std::size_t rank_of_subset(const std::vector<std::size_t>& s) const {
        std::vector<IntVector> v;
        for (std::size_t i : s) v.push_back(rays_[i]);
        return rank_of(v, dim_);
    }

    std::vector<std::vector<std::size_t>> triangulate(const std::vector<std::size_t>& face, std::size_t k) {
        if (face.size() == k) return {face};
        const std::size_t apex = face.front();
        std::vector<std::vector<std::size_t>> out;
        std::set<std::vector<std::size_t>> facets;
        const std::size_t nrows = tight_.empty() ? 0 : tight_.front().size();
        for (std::size_t row = 0; row < nrows; ++row) {
            if (tight_[apex][row]) continue;
            std::vector<std::size_t> z;
            for (std::size_t i : face)
                if (tight_[i][row]) z.push_back(i);
            if (z.size() + 1 < k) continue;
            if (facets.count(z)) continue;
            if (rank_of_subset(z) != k - 1) continue;
            facets.insert(z);
            for (auto& simplex : triangulate(z, k - 1)) {
                simplex.insert(simplex.begin(), apex);
                out.push_back(std::move(simplex));
            }
        }
        return out;
    }

    const std::vector<IntVector>& rays_;
    std::size_t dim_;
    std::vector<std::vector<char>> tight_;
};

/// Nonzero lattice points of {sum t_i r_i : 0 <= t_i < 1}, r_i the given
/// linearly independent columns in Z^dim.
inline std::vector<IntVector> parallelepiped_points(const std::vector<IntVector>& gens, std::size_t dim) {
    const std::size_t k = gens.size();
    const IntMatrix r = IntMatrix::from_columns(gens, dim);
    const SmithForm s = smith_normal_form(r);
    std::vector<Int> d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = s.D(i, i);
    const Int top = d.back();
    // Points are R * frac(W * (s_i / d_i)), s_i ranging over [0, d_i).
    std::vector<IntVector> out;
    std::vector<Int> digit(k, 0);
    for (;;) {
        std::size_t i = 0;
        while (i < k) {
            if (++digit[i] < d[i]) break;
            digit[i] = 0;
            ++i;
        }
        if (i == k) break;
        IntVector scaled_s(k);
        for (std::size_t t = 0; t < k; ++t) scaled_s[t] = digit[t] * (top / d[t]);
        IntVector coeff = s.V * scaled_s;
        for (Int& c : coeff) c = mod_floor(c, top);
        IntVector p = r * coeff;
        for (Int& x : p) x /= top;
        out.push_back(std::move(p));
    }
    return out;
}

/// Hilbert basis of the pointed cone {y : H y >= 0} in Z^dim.
inline std::vector<IntVector> pointed_hilbert_basis(const std::vector<IntVector>& rows, std::size_t dim) {
    const std::vector<IntVector> rays = pointed_extreme_rays(rows, dim);
    if (rays.empty()) return {};
    std::set<IntVector> candidates(rays.begin(), rays.end());
    PullingTriangulation tri(rays, rows, dim);
    for (const auto& simplex : tri.run()) {
        std::vector<IntVector> gens;
        for (std::size_t i : simplex) gens.push_back(rays[i]);
        for (IntVector& p : parallelepiped_points(gens, dim)) candidates.insert(std::move(p));
    }
    const std::vector<IntVector> cand(candidates.begin(), candidates.end());
    auto in_cone = [&](const IntVector& y) {
        for (const IntVector& l : rows)
            if (dot(l, y) < 0) return false;
        return true;
    };
    std::vector<IntVector> basis;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        bool reducible = false;
        for (std::size_t j = 0; j < cand.size() && !reducible; ++j)
            if (j != i && in_cone(subtract(cand[i], cand[j]))) reducible = true;
        if (!reducible) basis.push_back(cand[i]);
    }
    return basis;
}

}  // namespace detail

/// Generators of the semigroup C ∩ c·Z^N: c times the generators of C ∩ Z^N.
inline SemigroupGens hilbert_basis(const HalfspaceCone& cone, const Int& scale) {
    if (scale <= 0) throw Error("scale must be positive");
    const PointedQuotient q = pointed_quotient(cone);
    SemigroupGens out;
    out.scale = scale;
    for (const IntVector& b : q.lineality) {
        out.lineality_gens.push_back(scaled(b, scale));
        out.lineality_gens.push_back(scaled(b, -scale));
    }
    for (const IntVector& y : detail::pointed_hilbert_basis(q.rows, q.rank))
        out.pointed_gens.push_back(scaled(reduce_modulo_lattice(q.lift(y), q.lineality), scale));
    std::sort(out.lineality_gens.begin(), out.lineality_gens.end(), graded_less);
    std::sort(out.pointed_gens.begin(), out.pointed_gens.end(), graded_less);
    return out;
}

namespace detail {

/// Decides membership of points in the additive monoid generated by a finite
/// set, for points of a fixed cone. Generators vanishing on every inequality
/// are used as a group when their negatives are also present; the others
/// strictly increase the sum of the inequality values, which bounds the search.
/// Remaining generators (nonpositive total value, unpaired) are not used.
class MonoidOracle {
public:
    MonoidOracle(const HalfspaceCone& cone, const std::vector<IntVector>& gens) : cone_(cone) {
        const std::size_t n = cone.ambient_dim();
        weight_ = IntVector(n);
        for (const IntVector& l : cone.inequalities()) weight_ = add(weight_, l);
        all_in_cone_ = true;
        for (const IntVector& g : gens)
            if (!cone_member(cone, g)) all_in_cone_ = false;
        std::set<IntVector> present(gens.begin(), gens.end());
        std::vector<IntVector> group;
        for (const IntVector& g : gens) {
            if (g.size() != n) throw Error("generator length does not match the cone");
            if (is_zero(g)) continue;
            const bool on_lineality = std::all_of(cone.inequalities().begin(), cone.inequalities().end(),
                                                  [&](const IntVector& l) { return dot(l, g) == 0; });
            if (on_lineality && present.count(negated(g))) {
                group.push_back(g);
            } else if (dot(weight_, g) > 0) {
                positive_.push_back(g);
            }
        }
        group_ = lattice_basis(group, n);
    }

    bool contains(const IntVector& x) { return reachable(reduce_modulo_lattice(x, group_)); }

private:
    bool reachable(const IntVector& x) {
        if (is_zero(x)) return true;
        if (dot(weight_, x) <= 0) return false;
        if (all_in_cone_ && !cone_member(cone_, x)) return false;
        auto it = memo_.find(x);
        if (it != memo_.end()) return it->second;
        bool ok = false;
        for (const IntVector& g : positive_) {
            if (reachable(reduce_modulo_lattice(subtract(x, g), group_))) {
                ok = true;
                break;
            }
        }
        memo_.emplace(x, ok);
        return ok;
    }

    const HalfspaceCone& cone_;
    IntVector weight_;
    bool all_in_cone_ = true;
    std::vector<IntVector> positive_;
    std::vector<IntVector> group_;
    std::map<IntVector, bool> memo_;
};

/// Calls visit(x) for every x in C ∩ c·Z^N with coordinates in [-box, box].
template <typename Visit>
bool for_each_box_point(const HalfspaceCone& cone, const Int& scale, const Int& box, Visit&& visit) {
    const std::size_t n = cone.ambient_dim();
    const Int steps = box / scale;
    IntVector x(n, -steps * scale);
    for (;;) {
        if (cone_member(cone, x) && !visit(x)) return false;
        std::size_t i = 0;
        while (i < n) {
            x[i] += scale;
            if (x[i] <= steps * scale) break;
            x[i] = -steps * scale;
            ++i;
        }
        if (i == n) return true;
    }
}

}  // namespace detail

/// Whether every point of C ∩ c·Z^N with coordinates in [-box, box] is a
/// nonnegative integer combination of gens.
inline bool verify_hilbert(const HalfspaceCone& cone, const Int& scale, const std::vector<IntVector>& gens,
                           const Int& box) {
    if (scale <= 0) throw Error("scale must be positive");
    detail::MonoidOracle oracle(cone, gens);
    return detail::for_each_box_point(cone, scale, box, [&](const IntVector& x) { return oracle.contains(x); });
}

/// As verify_hilbert, returning the first unreachable point if any.
inline std::optional<IntVector> find_unreachable(const HalfspaceCone& cone, const Int& scale,
                                                 const std::vector<IntVector>& gens, const Int& box) {
    detail::MonoidOracle oracle(cone, gens);
    std::optional<IntVector> witness;
    detail::for_each_box_point(cone, scale, box, [&](const IntVector& x) {
        if (oracle.contains(x)) return true;
        witness = x;
        return false;
    });
    return witness;
}

}  // namespace tvb

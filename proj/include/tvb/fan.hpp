/**
 * @file fan.hpp
 * @brief Fans of toric varieties: rays, cones and the structural checks the
 * rest of the library relies on.
 */
#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "tvb/double_description.hpp"
#include "tvb/exactalg.hpp"

namespace tvb {

/// A fan in N = Z^n. Only the listed cones are stored; their faces are implied.
struct Fan {
    std::size_t n = 0;
    std::vector<IntVector> rays;                  ///< primitive generators v_j
    std::vector<std::vector<std::size_t>> cones;  ///< ray-index sets

    std::size_t ray_count() const { return rays.size(); }

    std::vector<IntVector> cone_rays(std::size_t cone) const {
        std::vector<IntVector> out;
        for (std::size_t j : cones.at(cone)) out.push_back(rays.at(j));
        return out;
    }

    friend bool operator==(const Fan&, const Fan&) = default;
};

namespace detail {

/// Whether cone(gens) contains a line.
inline bool has_lineality(const std::vector<IntVector>& gens, std::size_t n) {
    // cone(gens) is pointed iff its dual {u : <u, g> >= 0} is full-dimensional.
    const ConeGenerators dual = cone_generators(HalfspaceCone(n, gens));
    std::vector<IntVector> all = dual.lineality;
    all.insert(all.end(), dual.rays.begin(), dual.rays.end());
    return rank_of(all, n) < n;
}

/// Whether x lies in cone(gens) (gens possibly empty).
inline bool in_generated_cone(const IntVector& x, const std::vector<IntVector>& gens, std::size_t n) {
    if (gens.empty()) return is_zero(x);
    const ConeGenerators dual = cone_generators(HalfspaceCone(n, gens));
    for (const IntVector& l : dual.lineality)
        if (dot(l, x) != 0) return false;
    for (const IntVector& r : dual.rays)
        if (dot(r, x) < 0) return false;
    return true;
}

}  // namespace detail

/// Human-readable violations of the fan invariants; empty iff the fan is valid.
inline std::vector<std::string> validate_fan(const Fan& f) {
    std::vector<std::string> out;
    if (f.n == 0) {
        out.push_back("lattice rank n must be positive");
        return out;
    }
    std::vector<bool> usable(f.rays.size(), true);
    for (std::size_t j = 0; j < f.rays.size(); ++j) {
        const IntVector& v = f.rays[j];
        if (v.size() != f.n) {
            out.push_back("ray " + std::to_string(j) + " has length " + std::to_string(v.size()) + ", expected " +
                          std::to_string(f.n));
            usable[j] = false;
        } else if (is_zero(v)) {
            out.push_back("ray " + std::to_string(j) + " is zero");
            usable[j] = false;
        } else if (content(v) != 1) {
            out.push_back("ray " + std::to_string(j) + " not primitive");
        }
    }
    for (std::size_t i = 0; i < f.rays.size(); ++i)
        for (std::size_t j = i + 1; j < f.rays.size(); ++j)
            if (f.rays[i] == f.rays[j])
                out.push_back("rays " + std::to_string(i) + " and " + std::to_string(j) + " identical");

    for (std::size_t c = 0; c < f.cones.size(); ++c) {
        const auto& cone = f.cones[c];
        const std::string name = "cone " + std::to_string(c);
        if (cone.empty()) {
            out.push_back(name + " is empty");
            continue;
        }
        bool indices_ok = true;
        std::set<std::size_t> seen;
        for (std::size_t j : cone) {
            if (j >= f.rays.size()) {
                out.push_back(name + " references ray " + std::to_string(j) + " out of range");
                indices_ok = false;
            } else if (!usable[j]) {
                indices_ok = false;
            } else if (!seen.insert(j).second) {
                out.push_back(name + " lists ray " + std::to_string(j) + " twice");
                indices_ok = false;
            }
        }
        if (!indices_ok) continue;
        const auto gens = f.cone_rays(c);
        if (detail::has_lineality(gens, f.n)) {
            out.push_back(name + " is not strongly convex");
            continue;
        }
        for (std::size_t k = 0; k < gens.size(); ++k) {
            std::vector<IntVector> others;
            for (std::size_t t = 0; t < gens.size(); ++t)
                if (t != k) others.push_back(gens[t]);
            if (detail::in_generated_cone(gens[k], others, f.n))
                out.push_back(name + ": ray " + std::to_string(cone[k]) + " is not an extreme ray");
        }
    }
    return out;
}

/// Every listed cone is generated by part of a lattice basis.
inline bool is_smooth(const Fan& f) {
    for (std::size_t c = 0; c < f.cones.size(); ++c) {
        const auto gens = f.cone_rays(c);
        const auto factors = smith_normal_form(IntMatrix::from_rows(gens, f.n)).invariant_factors();
        if (factors.size() != gens.size()) return false;
        for (const Int& d : factors)
            if (d != 1) return false;
    }
    return true;
}

/// Every listed cone has linearly independent ray generators.
inline bool is_simplicial(const Fan& f) {
    for (std::size_t c = 0; c < f.cones.size(); ++c) {
        const auto gens = f.cone_rays(c);
        if (rank_of(gens, f.n) != gens.size()) return false;
    }
    return true;
}

/// Whether the rays positively span N_R, i.e. {u : <u, v_j> <= 0 for all j} = {0}.
inline bool rays_positively_span(const Fan& f) {
    if (f.rays.empty()) return false;
    std::vector<IntVector> rows;
    for (const IntVector& v : f.rays) rows.push_back(negated(v));
    const ConeGenerators g = cone_generators(HalfspaceCone(f.n, rows));
    return g.lineality.empty() && g.rays.empty();
}

}  // namespace tvb

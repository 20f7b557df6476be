// Shared bundles and grid helpers for the unit and acceptance tests.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tvb/bundle.hpp"
#include "tvb/fan.hpp"

namespace fixtures {

using tvb::Fan;
using tvb::Int;
using tvb::IntVector;
using tvb::Line;
using tvb::RankTwoBundle;
using tvb::RayFiltration;
using tvb::ToricBundle;

inline RayFiltration lineless(long long a) { return {a, a + 1, std::nullopt}; }
inline RayFiltration with_line(long long a, long long b, long long p, long long q) { return {a, b, Line(p, q)}; }

inline Fan p1_fan() { return Fan{1, {IntVector{1}, IntVector{-1}}, {{0}, {1}}}; }

inline Fan p2_fan() {
    return Fan{2, {IntVector{1, 0}, IntVector{0, 1}, IntVector{-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}};
}

/// O + O on P^1.
inline ToricBundle p1_trivial() { return ToricBundle(p1_fan(), RankTwoBundle{{lineless(0), lineless(0)}}); }

/// P^1 with the distinct lines (1:0) and (0:1), a = 0, b = 1.
inline ToricBundle p1_two_lines() {
    return ToricBundle(p1_fan(), RankTwoBundle{{with_line(0, 1, 1, 0), with_line(0, 1, 0, 1)}});
}

/// Tangent-like data on P^2: three rays, three distinct lines, a = 0, b = 1.
inline ToricBundle p2_three_lines() {
    return ToricBundle(p2_fan(), RankTwoBundle{{with_line(0, 1, 1, 0), with_line(0, 1, 0, 1), with_line(0, 1, 1, 1)}});
}

/// P^1 with gaps 2 and 1, so the Veronese scale is 2.
inline ToricBundle p1_scaled() {
    return ToricBundle(p1_fan(), RankTwoBundle{{with_line(0, 2, 1, 0), with_line(0, 1, 1, 1)}});
}

struct Named {
    std::string name;
    ToricBundle bundle;
};

inline std::vector<Named> all_bundles() {
    return {{"P1 trivial", p1_trivial()},
            {"P1 two lines", p1_two_lines()},
            {"P2 three lines", p2_three_lines()},
            {"P1 gaps 2,1", p1_scaled()}};
}

/// Calls visit(x) for every x in step * Z^dim with all |x_i| <= bound.
inline void for_each_grid_point(std::size_t dim, const Int& bound, const Int& step,
                                const std::function<void(const IntVector&)>& visit) {
    const Int top = bound / step * step;
    IntVector x(dim, -top);
    for (;;) {
        visit(x);
        std::size_t i = 0;
        while (i < dim) {
            x[i] += step;
            if (x[i] <= top) break;
            x[i] = -top;
            ++i;
        }
        if (i == dim) return;
    }
}

}  // namespace fixtures

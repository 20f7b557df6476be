#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "compat_cases.hpp"
#include "fixtures.hpp"
#include "tvb/bundle.hpp"

using namespace tvb;
using fixtures::lineless;
using fixtures::with_line;

TEST(Lines, Canonical) {
    EXPECT_EQ(Line(2, 4), Line(1, 2));
    EXPECT_EQ(Line(-1, -1), Line(1, 1));
    EXPECT_EQ(Line(0, -3), Line(0, 1));
    EXPECT_EQ(Line(-2, 3).str(), "(2:-3)");
    EXPECT_THROW(Line(0, 0), Error);
}

TEST(ValidateBundle, Problems) {
    const Fan f = fixtures::p1_fan();
    EXPECT_TRUE(validate_bundle(f, RankTwoBundle{{lineless(0), lineless(3)}}).empty());
    EXPECT_FALSE(validate_bundle(f, RankTwoBundle{{lineless(0)}}).empty());
    EXPECT_FALSE(validate_bundle(f, RankTwoBundle{{{0, 0, Line(1, 0)}, lineless(0)}}).empty());
    EXPECT_FALSE(validate_bundle(f, RankTwoBundle{{{0, 2, std::nullopt}, lineless(0)}}).empty());
}

TEST(ClassifyRays, Examples) {
    const auto two = classify_rays(RankTwoBundle{{with_line(0, 1, 1, 0), with_line(0, 1, 0, 1)}});
    EXPECT_EQ(two.line_count(), 2u);
    EXPECT_TRUE(two.groups[0].empty());
    EXPECT_EQ(two.groups[1], std::vector<std::size_t>{0});
    EXPECT_EQ(two.groups[2], std::vector<std::size_t>{1});

    const auto same = classify_rays(RankTwoBundle{{with_line(0, 1, 1, 1), with_line(0, 1, 2, 2)}});
    EXPECT_EQ(same.line_count(), 1u);
    EXPECT_EQ(same.groups[1], (std::vector<std::size_t>{0, 1}));

    const auto none = classify_rays(RankTwoBundle{{lineless(0), lineless(0)}});
    EXPECT_EQ(none.line_count(), 0u);
    EXPECT_EQ(none.groups[0], (std::vector<std::size_t>{0, 1}));
}

TEST(ClassifyRays, PermutationRelabelsOnly) {
    const std::vector<RayFiltration> rays{with_line(0, 1, 1, 0), lineless(1), with_line(0, 2, 1, 1), with_line(-1, 1, 1, 0),
                                          with_line(0, 1, 0, 1)};
    const auto base = classify_rays(RankTwoBundle{rays});
    std::vector<std::size_t> perm{0, 1, 2, 3, 4};
    do {
        std::vector<RayFiltration> permuted;
        for (std::size_t i : perm) permuted.push_back(rays[i]);
        const auto c = classify_rays(RankTwoBundle{permuted});
        ASSERT_EQ(c.line_count(), base.line_count());
        // Ray perm[i] of the original sits at position i; partitions must agree.
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t k = 0; k < perm.size(); ++k)
                EXPECT_EQ(c.group_of[i] == c.group_of[k], base.group_of[perm[i]] == base.group_of[perm[k]]);
        for (std::size_t i = 0; i < perm.size(); ++i)
            EXPECT_EQ(c.group_of[i] == 0, base.group_of[perm[i]] == 0);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(EnumerateJ, Examples) {
    const auto two = classify_rays(RankTwoBundle{{with_line(0, 1, 1, 0), with_line(0, 1, 0, 1)}});
    const auto j2 = enumerate_J(two);
    EXPECT_EQ(j2, (std::vector<std::vector<std::size_t>>{{}, {0}, {1}, {0, 1}}));

    const auto same = classify_rays(RankTwoBundle{{with_line(0, 1, 1, 1), with_line(0, 1, 1, 1)}});
    EXPECT_EQ(enumerate_J(same), (std::vector<std::vector<std::size_t>>{{}, {0}, {1}}));

    const auto none = classify_rays(RankTwoBundle{{lineless(0), lineless(0)}});
    EXPECT_EQ(enumerate_J(none), (std::vector<std::vector<std::size_t>>{{}}));
}

TEST(EnumerateJ, CountIsProductAndAllAdmissible) {
    const RankTwoBundle e{{with_line(0, 1, 1, 0), with_line(0, 1, 1, 0), with_line(0, 1, 0, 1), lineless(0),
                           with_line(0, 1, 1, 1), with_line(0, 1, 1, 0)}};
    const auto c = classify_rays(e);
    std::size_t expected = 1;
    for (std::size_t l = 1; l < c.groups.size(); ++l) expected *= c.groups[l].size() + 1;
    const auto js = enumerate_J(c);
    EXPECT_EQ(js.size(), expected);
    for (const auto& j : js) EXPECT_TRUE(is_admissible_J(c, j));
    std::set<std::vector<std::size_t>> distinct(js.begin(), js.end());
    EXPECT_EQ(distinct.size(), js.size());
    EXPECT_FALSE(is_admissible_J(c, {0, 1}));  // same line twice
    EXPECT_FALSE(is_admissible_J(c, {3}));     // lineless ray
    EXPECT_FALSE(is_admissible_J(c, {2, 0}));  // unsorted
    EXPECT_FALSE(is_admissible_J(c, {9}));
}

TEST(Compatibility, SingleRayConesAlwaysSplit) {
    const Fan f = fixtures::p1_fan();
    for (const auto& c : compat::ray_choices())
        for (const auto& d : compat::ray_choices()) {
            RankTwoBundle e;
            for (const auto* x : {&c, &d}) {
                std::optional<Line> line;
                if (x->line) line = Line(x->line->first, x->line->second);
                e.filtrations.push_back({x->a, x->b, line});
            }
            EXPECT_TRUE(check_compatibility(f, e).compatible);
        }
}

TEST(Compatibility, ThreeLinesOnOneConeFail) {
    const Fan f{3, {make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({0, 0, 1})}, {{0, 1, 2}}};
    const RankTwoBundle e{{with_line(0, 1, 1, 0), with_line(0, 1, 0, 1), with_line(0, 1, 1, 1)}};
    const auto r = check_compatibility(f, e);
    EXPECT_FALSE(r.compatible);
    EXPECT_EQ(r.failing_cone, std::optional<std::size_t>(0));
    EXPECT_THROW(ToricBundle(f, e), Error);
}

TEST(Compatibility, TwoLinesOnSquareCone) {
    const Fan f{2, {make_vector({1, 0}), make_vector({0, 1})}, {{0, 1}}};
    const RankTwoBundle e{{with_line(0, 1, 1, 0), with_line(0, 1, 0, 1)}};
    EXPECT_TRUE(check_compatibility(f, e).compatible);
    // The splitting characters: u1 pairs to (b, a) = (1, 0), u2 to (a, b) = (0, 1).
    const IntMatrix rays = IntMatrix::from_rows(f.rays, 2);
    EXPECT_EQ(solve_integer_linear(rays, make_vector({1, 0})), make_vector({1, 0}));
    EXPECT_EQ(solve_integer_linear(rays, make_vector({0, 1})), make_vector({0, 1}));
}

TEST(Compatibility, FixturesAreCompatible) {
    for (const auto& b : fixtures::all_bundles()) EXPECT_TRUE(check_compatibility(b.bundle.fan(), b.bundle.bundle()));
}

TEST(Compatibility, FaceRestriction) {
    // Compatible on a maximal cone implies compatible on every subset of its rays.
    const auto rays = compat::smooth_cones()[3];
    const auto choices = compat::ray_choices();
    for (std::size_t i0 = 0; i0 < choices.size(); i0 += 2)
        for (std::size_t i1 = 0; i1 < choices.size(); i1 += 3)
            for (std::size_t i2 = 0; i2 < choices.size(); i2 += 5) {
                Fan f;
                f.n = 3;
                RankTwoBundle e;
                for (std::size_t j = 0; j < 3; ++j) {
                    IntVector v;
                    for (long long x : rays[j]) v.push_back(x);
                    f.rays.push_back(v);
                    const auto& c = choices[std::array<std::size_t, 3>{i0, i1, i2}[j]];
                    std::optional<Line> line;
                    if (c.line) line = Line(c.line->first, c.line->second);
                    e.filtrations.push_back({c.a, c.b, line});
                }
                f.cones = {{0, 1, 2}};
                if (!check_compatibility(f, e)) continue;
                f.cones = {{0, 1}, {1, 2}, {0, 2}, {0}, {1}, {2}};
                EXPECT_TRUE(check_compatibility(f, e).compatible);
            }
}

TEST(Compatibility, AgreesWithDecompositionSearchInDimensionTwo) {
    for (const auto& cone : compat::smooth_cones()) {
        if (cone.size() != 2) continue;
        compat::Outcome out;
        compat::compare_on_cone(cone, 1, out);
        EXPECT_EQ(out.disagreements, 0);
        // Two rays of a smooth cone can always be split.
        EXPECT_EQ(out.compatible, out.cases);
    }
}

TEST(Compatibility, AgreesWithDecompositionSearchOnSampledThreeCones) {
    for (const auto& cone : compat::smooth_cones()) {
        if (cone.size() != 3) continue;
        compat::Outcome out;
        compat::compare_on_cone(cone, 37, out);
        EXPECT_EQ(out.disagreements, 0);
        EXPECT_GT(out.compatible, 0);
        EXPECT_LT(out.compatible, out.cases);
    }
}

TEST(ToricBundle, RejectsBadInput) {
    EXPECT_THROW(ToricBundle(fixtures::p1_fan(), RankTwoBundle{{lineless(0)}}), Error);
    EXPECT_THROW(ToricBundle(Fan{1, {make_vector({2})}, {{0}}}, RankTwoBundle{{lineless(0)}}), Error);
    const ToricBundle tb = fixtures::p2_three_lines();
    EXPECT_EQ(tb.degree_dim(), 6u);
    EXPECT_EQ(tb.classification().line_count(), 3u);
}

#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "tvb/fan.hpp"

using namespace tvb;

TEST(ValidateFan, Examples) {
    EXPECT_TRUE(validate_fan(fixtures::p1_fan()).empty());
    const Fan dup{2, {make_vector({1, 0}), make_vector({1, 0})}, {{0}, {1}}};
    const auto v = validate_fan(dup);
    ASSERT_FALSE(v.empty());
    EXPECT_EQ(v.front(), "rays 0 and 1 identical");
    const Fan fat{2, {make_vector({2, 4})}, {{0}}};
    EXPECT_EQ(validate_fan(fat).front(), "ray 0 not primitive");
}

TEST(ValidateFan, StructuralProblems) {
    EXPECT_FALSE(validate_fan(Fan{2, {make_vector({1, 0, 0})}, {{0}}}).empty());
    EXPECT_FALSE(validate_fan(Fan{2, {make_vector({0, 0})}, {{0}}}).empty());
    EXPECT_FALSE(validate_fan(Fan{2, {make_vector({1, 0})}, {{3}}}).empty());
    EXPECT_FALSE(validate_fan(Fan{2, {make_vector({1, 0})}, {{}}}).empty());
    // (1,0) and (-1,0) in one cone span a line.
    EXPECT_FALSE(validate_fan(Fan{2, {make_vector({1, 0}), make_vector({-1, 0})}, {{0, 1}}}).empty());
    // (1,1) lies inside the cone of (1,0),(0,1).
    EXPECT_FALSE(
        validate_fan(Fan{2, {make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 1})}, {{0, 1, 2}}}).empty());
}

namespace {

/// Violations with cone positions removed, sorted.
std::vector<std::string> unlabelled(std::vector<std::string> v) {
    for (auto& s : v)
        if (s.rfind("cone ", 0) == 0) s = s.substr(s.find(':') + 2);
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(ValidateFan, OrderIndependentAndIdempotent) {
    const Fan bad{2, {make_vector({2, 4}), make_vector({1, 0}), make_vector({1, 0})}, {{0}, {1, 2}}};
    const auto a = validate_fan(bad), b = validate_fan(bad);
    EXPECT_EQ(a, b);
    EXPECT_FALSE(a.empty());
    Fan reordered = bad;
    std::reverse(reordered.cones.begin(), reordered.cones.end());
    EXPECT_EQ(unlabelled(a), unlabelled(validate_fan(reordered)));
}

TEST(Smoothness, Examples) {
    EXPECT_TRUE(is_smooth(fixtures::p1_fan()));
    EXPECT_FALSE(is_smooth(Fan{2, {make_vector({1, 0}), make_vector({1, 2})}, {{0, 1}}}));
    EXPECT_TRUE(is_smooth(fixtures::p2_fan()));
}

TEST(Simpliciality, Examples) {
    EXPECT_TRUE(is_simplicial(fixtures::p2_fan()));
    EXPECT_TRUE(is_simplicial(fixtures::p1_fan()));
    const Fan square{3,
                     {make_vector({1, 0, 1}), make_vector({0, 1, 1}), make_vector({-1, 0, 1}), make_vector({0, -1, 1})},
                     {{0, 1, 2, 3}}};
    EXPECT_TRUE(validate_fan(square).empty());
    EXPECT_FALSE(is_simplicial(square));
    EXPECT_FALSE(is_smooth(square));
}

TEST(PositiveSpan, Examples) {
    EXPECT_TRUE(rays_positively_span(fixtures::p1_fan()));
    EXPECT_FALSE(rays_positively_span(Fan{1, {make_vector({1})}, {{0}}}));
    EXPECT_TRUE(rays_positively_span(fixtures::p2_fan()));
    EXPECT_FALSE(rays_positively_span(Fan{2, {make_vector({1, 0}), make_vector({0, 1})}, {{0, 1}}}));
}

TEST(Smoothness, ImpliesSimplicialOnCorpus) {
    std::vector<Fan> corpus{fixtures::p1_fan(), fixtures::p2_fan(),
                            Fan{2, {make_vector({1, 0}), make_vector({1, 2})}, {{0, 1}}},
                            Fan{2, {make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, 0}), make_vector({0, -1})},
                                {{0, 1}, {1, 2}, {2, 3}, {3, 0}}},
                            Fan{3,
                                {make_vector({1, 0, 1}), make_vector({0, 1, 1}), make_vector({-1, 0, 1}),
                                 make_vector({0, -1, 1})},
                                {{0, 1, 2, 3}}}};
    for (const Fan& f : corpus) {
        ASSERT_TRUE(validate_fan(f).empty());
        if (is_smooth(f)) EXPECT_TRUE(is_simplicial(f));
    }
}

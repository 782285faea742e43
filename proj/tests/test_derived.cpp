#include <gtest/gtest.h>

#include "quivers.hpp"
#include "smm/derived.hpp"

using namespace smm;
using namespace fixtures;

namespace {

DerivedEngine a_engine(std::size_t n)
{
    return DerivedEngine(AlgebraSpec{linear_a(n), std::nullopt, false}, kDefaultModulus, 1);
}

}  // namespace

TEST(DerivedEngine, ConeOfExtensionClassA2)
{
    auto e = a_engine(2);
    auto q = linear_a(2);
    auto s1 = e.find_or_add(Representation::simple(q, 0));
    auto s2 = e.find_or_add(Representation::simple(q, 1));
    auto p1 = e.find_or_add(projective(q, 0));
    Term x{s1, 0}, y{s2, 1};
    ASSERT_EQ(e.hom_dim(x, y), 1u);
    auto z = e.cone(DMorphism{{x}, {y}, {{{1}}}});
    EXPECT_EQ(z, (DObject{{p1, 1}}));
    // Rotation: S2 -> P1 -> S1 -> S2[1].
    auto inc = e.cone(DMorphism{{{s2, 0}}, {{p1, 0}}, {{{1}}}});
    EXPECT_EQ(inc, (DObject{{s1, 0}}));
}

TEST(DerivedEngine, ConeOfIdentityAndZero)
{
    auto e = a_engine(2);
    auto q = linear_a(2);
    auto p1 = e.find_or_add(projective(q, 0));
    auto s2 = e.find_or_add(Representation::simple(q, 1));
    Term x{p1, 0}, y{s2, 2};
    EXPECT_TRUE(e.cone(DMorphism{{x}, {x}, {{{1}}}}).empty());
    auto z = e.cone(DMorphism{{x}, {y}, {{{}}}});
    EXPECT_EQ(z, normalized({y, {p1, 1}}));
}

TEST(DerivedEngine, TubeApproximationAndCone)
{
    auto q = cyclic3();
    DerivedEngine e(AlgebraSpec{q, std::nullopt, true}, kDefaultModulus, 1);
    auto s1 = e.find_or_add(tube_uniserial(0, 1));
    auto s2 = e.find_or_add(tube_uniserial(1, 1));
    auto s3 = e.find_or_add(tube_uniserial(2, 1));
    auto cl = e.extension_closure({{s1, 0}, {s2, 0}}, 6);
    EXPECT_FALSE(cl.capped);
    ASSERT_EQ(cl.members.size(), 3u);
    auto s21 = e.find_or_add(tube_uniserial(1, 2));
    EXPECT_EQ(cl.members[2], (Term{s21, 0}));
    auto a = e.right_approximation({s3, 1}, cl.members);
    EXPECT_TRUE(a.verified);
    EXPECT_EQ(a.summands, (DObject{{s21, 0}}));
    auto big = e.find_or_add(tube_uniserial(1, 3));
    EXPECT_EQ(a.cone, (DObject{{big, 1}}));
}

TEST(DerivedEngine, LoopApproximationUsesLongestMember)
{
    auto q = loop_quiver();
    DerivedEngine e(AlgebraSpec{q, std::nullopt, true}, kDefaultModulus, 1);
    auto s2 = e.find_or_add(Representation::simple(q, 1));
    auto x1 = e.find_or_add(x_n(1));
    auto cl = e.extension_closure({{x1, 0}}, 4);
    EXPECT_TRUE(cl.capped);
    ASSERT_EQ(cl.members.size(), 4u);
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(e.hom_dim(cl.members[n - 1], {s2, 1}), n);
    auto a = e.right_approximation({s2, 1}, cl.members);
    ASSERT_EQ(a.summands.size(), 1u);
    EXPECT_EQ(a.summands[0], cl.members[3]);
    EXPECT_EQ(a.cone, (DObject{{e.find_or_add(m_n(4)), 1}}));
}

TEST(DerivedEngine, MinimizeDropsProjectiveSummand)
{
    auto e = a_engine(2);
    auto q = linear_a(2);
    auto s1 = e.find_or_add(Representation::simple(q, 0));
    auto s2 = e.find_or_add(Representation::simple(q, 1));
    auto p1 = e.find_or_add(projective(q, 0));
    Term d{s2, 1};
    EXPECT_EQ(e.hom_dim({p1, 0}, d), 0u);
    Approximation a;
    a.object = d;
    a.summands = {{s1, 0}, {p1, 0}, {s1, 0}};
    a.components = {{1}, {}, {2}};
    auto m = e.minimize_right(a);
    EXPECT_EQ(m.summands, (DObject{{s1, 0}}));
    EXPECT_EQ(m.cone, (DObject{{p1, 1}}));
}

TEST(DerivedEngine, LeftApproximationA2)
{
    auto e = a_engine(2);
    auto q = linear_a(2);
    auto s1 = e.find_or_add(Representation::simple(q, 0));
    auto s2 = e.find_or_add(Representation::simple(q, 1));
    auto p1 = e.find_or_add(projective(q, 0));
    // Left approximation of S2 by {S1[1], P1}: S2 -> P1 (the inclusion) suffices.
    auto a = e.left_approximation({s2, 0}, {{s1, 1}, {p1, 0}});
    EXPECT_TRUE(a.verified);
    EXPECT_EQ(a.summands, (DObject{{p1, 0}}));
    EXPECT_EQ(a.cone, (DObject{{s1, 0}}));
}

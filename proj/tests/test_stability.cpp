#include <gtest/gtest.h>

#include "smm/stability.hpp"

using namespace smm;

namespace {

Charge ch(long long x, long long y) { return {Rational(x), Rational(y)}; }

Collection named(CategoryModel& m, const std::vector<std::string>& names)
{
    Collection c;
    for (const auto& n : names) c.members.push_back(m.parse(n));
    return c;
}

}  // namespace

TEST(Rational, Normalizes)
{
    EXPECT_EQ(Rational(2, -4), Rational(-1, 2));
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ((Rational(2, 3) * Rational(3, 4)).to_string(), "1/2");
    EXPECT_EQ(Rational(0, 5).to_string(), "0");
}

TEST(Charge, PhaseOrder)
{
    EXPECT_TRUE(in_upper_half_plane(ch(-1, 0)));
    EXPECT_FALSE(in_upper_half_plane(ch(1, 0)));
    EXPECT_FALSE(in_upper_half_plane(ch(0, -1)));
    EXPECT_EQ(compare_phase(ch(-1, 0), ch(0, 1)), 1);
    EXPECT_EQ(compare_phase(ch(1, 1), ch(2, 2)), 0);
    EXPECT_EQ(compare_phase(ch(-3, 1), ch(-2, 1)), 1);
    EXPECT_DOUBLE_EQ(phase_value(ch(-1, 1)), 0.75);
}

// For 0 -> A -> B -> C -> 0 with additive charges the phase of B lies between those of A and C.
TEST(Charge, SeesawExhaustive)
{
    for (int ax = -3; ax <= 3; ++ax)
        for (int ay = 0; ay <= 3; ++ay)
            for (int cx = -3; cx <= 3; ++cx)
                for (int cy = 0; cy <= 3; ++cy) {
                    Charge a = ch(ax, ay), c = ch(cx, cy);
                    if (!in_upper_half_plane(a) || !in_upper_half_plane(c)) continue;
                    Charge b{a.x + c.x, a.y + c.y};
                    EXPECT_EQ(compare_phase(a, b), compare_phase(b, c));
                }
}

TEST(HeartStability, SubobjectsOfModules)
{
    auto a2 = make_model(preset_a_n(2));
    Workbench wa(*a2);
    HeartStability st(wa, standard_collection(*a2), canonical_charge(standard_collection(*a2), {0}));
    ASSERT_TRUE(st.supported());
    auto p1 = a2->parse("[s1;s2]");
    auto subs = st.subobjects(a2->engine()->module(p1.id));
    std::set<std::vector<std::size_t>> dims;
    for (const auto& s : subs) dims.insert(s.dims);
    EXPECT_EQ(dims, (std::set<std::vector<std::size_t>>{{0, 1}, {1, 1}}));

    auto tube = make_model(preset_tube(3));
    Workbench wt(*tube);
    auto u = named(*tube, {"s1", "s2", "s3"});
    HeartStability ts(wt, u, canonical_charge(u, {0, 1}));
    auto m = tube->parse("[s2;s1;s3]");
    std::set<std::vector<std::size_t>> td;
    for (const auto& s : ts.subobjects(tube->engine()->module(m.id))) td.insert(s.dims);
    EXPECT_EQ(td, (std::set<std::vector<std::size_t>>{{0, 0, 1}, {1, 0, 1}, {1, 1, 1}}));
}

TEST(HeartStability, HarderNarasimhan)
{
    auto a2 = make_model(preset_a_n(2));
    Workbench wa(*a2);
    auto u = standard_collection(*a2);
    auto p1 = a2->engine()->module(a2->parse("[s1;s2]").id);
    // Simple top at phase 1/2, simple socle at phase 1: the socle destabilizes.
    HeartStability st(wa, u, CentralCharge{{ch(0, 1), ch(-1, 0)}});
    auto hn = st.hn_filtration(p1);
    ASSERT_EQ(hn.factors.size(), 2u);
    EXPECT_EQ(hn.factors[0].charge, ch(-1, 0));
    EXPECT_EQ(hn.factors[1].charge, ch(0, 1));
    EXPECT_FALSE(st.semistable(p1));
    // Reversed: P1 is stable of phase 3/4.
    HeartStability rs(wa, u, CentralCharge{{ch(-1, 0), ch(0, 1)}});
    auto one = rs.hn_filtration(p1);
    ASSERT_EQ(one.factors.size(), 1u);
    EXPECT_EQ(one.factors[0].charge, ch(-1, 1));
    EXPECT_TRUE(rs.semistable(p1));
}

TEST(HeartStability, PhasesDecreaseAlongFiltrations)
{
    auto tube = make_model(preset_tube(3));
    Workbench wt(*tube);
    auto u = named(*tube, {"s1", "s2", "s3"});
    HeartStability st(wt, u, CentralCharge{{ch(-1, 1), ch(1, 1), ch(0, 1)}});
    for (const auto& t : wt.catalog()) {
        if (t.shift != 0) continue;
        const auto& rep = tube->engine()->module(t.id);
        auto hn = st.hn_filtration(rep);
        ASSERT_FALSE(hn.inconclusive);
        Charge total{Rational(0), Rational(0)};
        for (std::size_t i = 0; i < hn.factors.size(); ++i) {
            total = {total.x + hn.factors[i].charge.x, total.y + hn.factors[i].charge.y};
            if (i > 0) EXPECT_EQ(compare_phase(hn.factors[i - 1].charge, hn.factors[i].charge), 1);
        }
        EXPECT_EQ(total, st.charge(rep.dims));
    }
}

TEST(PhaseGap, HoldsOnA2)
{
    auto a2 = make_model(preset_a_n(2));
    Workbench wa(*a2);
    auto r = phase_gap_check(wa, standard_collection(*a2), {0});
    EXPECT_TRUE(r.verdict.holds());
    ASSERT_TRUE(r.phi.has_value());
    // Torsionfree part {S2, P1}: charges (0,1) and (-1,1); the maximum is 3/4.
    EXPECT_EQ(*r.phi, ch(-1, 1));
    EXPECT_DOUBLE_EQ(phase_value(*r.phi), 0.75);
}

TEST(PhaseGap, FailsOnLoopAlgebra)
{
    auto ky = make_model(preset_ky(8));
    Workbench wk(*ky);
    auto r = phase_gap_check(wk, standard_collection(*ky), {0});
    ASSERT_TRUE(r.verdict.fails()) << r.verdict.notes;
    ASSERT_EQ(r.family.size(), 8u);
    for (std::size_t n = 1; n <= 8; ++n) {
        EXPECT_EQ(ky->label(r.family[n - 1]), "m" + std::to_string(n));
        // Charge from the dimension vector: n copies of the phase-1 simple plus one of the other.
        const auto& dims = ky->engine()->module(r.family[n - 1].id).dims;
        EXPECT_EQ(r.family_charges[n - 1], ch(-static_cast<long long>(dims[0]), static_cast<long long>(dims[1])));
        if (n > 1) EXPECT_EQ(compare_phase(r.family_charges[n - 1], r.family_charges[n - 2]), 1);
    }
}

TEST(PhaseGap, DegenerateSubsets)
{
    auto a3 = make_model(preset_a_n(3));
    Workbench w(*a3);
    auto u = standard_collection(*a3);
    EXPECT_TRUE(phase_gap_check(w, u, {0, 1, 2}).verdict.holds());
    auto none = phase_gap_check(w, u, {});
    EXPECT_TRUE(none.verdict.holds());
    EXPECT_EQ(*none.phi, ch(0, 1));
}

TEST(PhaseGap, ChargePlotIsSvg)
{
    auto svg = charge_svg({{"a", ch(-1, 1)}, {"b", ch(0, 1)}});
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find(">a<"), std::string::npos);
}

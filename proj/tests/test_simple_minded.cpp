#include <gtest/gtest.h>

#include "smm/simple_minded.hpp"

using namespace smm;

namespace {

std::vector<std::string> labels(CategoryModel& m, const std::vector<Term>& ts)
{
    std::vector<std::string> out;
    for (auto t : ts) out.push_back(m.label(t));
    return out;
}

Collection named(CategoryModel& m, const std::vector<std::string>& names, CollectionKind k = CollectionKind::SMC, int w = 0)
{
    Collection c;
    for (const auto& n : names) c.members.push_back(m.parse(n));
    c.kind = k;
    c.w = w;
    return c;
}

}  // namespace

TEST(SimpleMinded, Orthogonality)
{
    auto a2 = make_model(preset_a_n(2));
    Workbench wa(*a2);
    EXPECT_TRUE(wa.check_orthogonality(standard_collection(*a2), OrthMode::Infinity).holds());
    auto dup = wa.check_orthogonality(named(*a2, {"s1", "s1[1]"}), OrthMode::Infinity);
    EXPECT_TRUE(dup.fails());
    auto tube = make_model(preset_tube(3));
    Workbench wt(*tube);
    EXPECT_TRUE(wt.check_orthogonality(named(*tube, {"s1", "s2", "s3"}), OrthMode::Infinity).holds());
    // P1 and S2 over A2: Hom(S2, P1) is nonzero.
    EXPECT_TRUE(wa.check_orthogonality(named(*a2, {"s2", "[s1;s2]"}), OrthMode::Semibrick).fails());
}

TEST(SimpleMinded, Generation)
{
    auto a2 = make_model(preset_a_n(2));
    Workbench wa(*a2);
    EXPECT_TRUE(wa.check_generation(standard_collection(*a2)).holds());
    auto tube = make_model(preset_tube(3));
    Workbench wt(*tube);
    EXPECT_TRUE(wt.check_generation(named(*tube, {"s1", "s2", "s3"})).holds());
    auto v = wt.check_generation(named(*tube, {"s1", "s2"}));
    ASSERT_TRUE(v.fails());
    EXPECT_EQ(tube->label(v.witness.at(0)).substr(0, 2), "s3");
}

TEST(SimpleMinded, ApproximationsAndDivergence)
{
    auto tube = make_model(preset_tube(3));
    Workbench wt(*tube);
    auto r = wt.right_approximation(tube->parse("s3[1]"), {tube->parse("s1"), tube->parse("s2")});
    EXPECT_EQ(r.status, ApproxStatus::Found);
    EXPECT_EQ(labels(*tube, r.approx.summands), (std::vector<std::string>{"[s2;s1]"}));
    EXPECT_EQ(labels(*tube, r.approx.cone), (std::vector<std::string>{"[s2;s1;s3][1]"}));

    auto ky = make_model(preset_ky(8));
    Workbench wk(*ky);
    auto d = wk.right_approximation(ky->parse("s2[1]"), {ky->parse("s1")});
    EXPECT_EQ(d.status, ApproxStatus::Diverging);
    EXPECT_EQ(labels(*ky, d.chain), (std::vector<std::string>{"s1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"}));
    ASSERT_EQ(d.chain_cones.size(), 8u);
    EXPECT_EQ(labels(*ky, d.chain_cones[2]), (std::vector<std::string>{"m3[1]"}));
}

TEST(SimpleMinded, TubeMutation)
{
    auto tube = make_model(preset_tube(3));
    Workbench wt(*tube);
    auto u = named(*tube, {"s1", "s2", "s3"});
    auto m = wt.mutate(u, {0, 1}, Direction::Right);
    ASSERT_TRUE(m.ok);
    EXPECT_EQ(labels(*tube, m.result.members), (std::vector<std::string>{"s1", "s2", "[s2;s1;s3][1]"}));
    EXPECT_TRUE(m.axioms.holds()) << m.axioms.notes;
    ASSERT_EQ(m.result.history.size(), 1u);
    ASSERT_EQ(m.result.history[0].triangles.size(), 1u);
    EXPECT_EQ(labels(*tube, m.result.history[0].triangles[0].source), (std::vector<std::string>{"[s2;s1]"}));
    EXPECT_EQ(labels(*tube, m.normalized->members), (std::vector<std::string>{"s1[-1]", "s2[-1]", "[s2;s1;s3]"}));

    auto back = wt.mutate(m.result, {0, 1}, Direction::Left);
    ASSERT_TRUE(back.ok);
    EXPECT_EQ(back.result.members, u.members);
}

TEST(SimpleMinded, DegenerateSubsets)
{
    auto a3 = make_model(preset_a_n(3));
    Workbench w(*a3);
    auto u = standard_collection(*a3);
    auto same = w.mutate(u, {0, 1, 2}, Direction::Right);
    EXPECT_EQ(same.result.members, u.members);
    auto all = w.mutate(u, {}, Direction::Right);
    for (std::size_t i = 0; i < u.members.size(); ++i) EXPECT_EQ(all.result.members[i], a3->shift(u.members[i], 1));
    EXPECT_THROW(w.mutate(u, {0, 0}, Direction::Right), RepError);
    EXPECT_THROW(w.mutate(u, {5}, Direction::Right), RepError);
}

TEST(SimpleMinded, SimpleTilts)
{
    auto a2 = make_model(preset_a_n(2));
    Workbench wa(*a2);
    auto t = wa.simple_tilt(standard_collection(*a2), {0}, Direction::Right);
    EXPECT_EQ(labels(*a2, t.simples), (std::vector<std::string>{"s1[-1]", "[s1;s2]"}));
    EXPECT_TRUE(t.checks.holds()) << t.checks.notes;
    auto same = wa.simple_tilt(standard_collection(*a2), {}, Direction::Right);
    EXPECT_EQ(labels(*a2, same.simples), (std::vector<std::string>{"s1", "s2"}));

    auto tube = make_model(preset_tube(3));
    Workbench wt(*tube);
    auto tt = wt.simple_tilt(named(*tube, {"s1", "s2", "s3"}), {0, 1}, Direction::Right);
    EXPECT_EQ(labels(*tube, tt.simples), (std::vector<std::string>{"s1[-1]", "s2[-1]", "[s2;s1;s3]"}));
    EXPECT_TRUE(tt.checks.holds()) << tt.checks.notes;

    auto ky = make_model(preset_ky(6));
    Workbench wk(*ky);
    try {
        wk.simple_tilt(standard_collection(*ky), {0}, Direction::Right);
        FAIL() << "expected ApproximationMissing";
    } catch (const RepError& e) {
        EXPECT_EQ(e.code(), "ApproximationMissing");
    }
}

TEST(SimpleMinded, TorsionPairs)
{
    auto tube = make_model(preset_tube(3));
    Workbench wt(*tube);
    auto u = named(*tube, {"s1", "s2", "s3"});
    auto tp = wt.torsion_pair(u, {0, 1});
    auto t = labels(*tube, tp.torsion);
    std::sort(t.begin(), t.end());
    EXPECT_EQ(t, (std::vector<std::string>{"[s2;s1]", "s1", "s2"}));
    for (auto f : tp.torsionfree) EXPECT_EQ(tube->label(f).back() == ']' ? tube->label(f).substr(tube->label(f).size() - 3) : tube->label(f), tube->label(f).back() == ']' ? "s3]" : "s3");
    EXPECT_EQ(tp.torsionfree.size(), 6u);
    EXPECT_NE(tp.verdict.status, VerdictStatus::Fails);

    auto a2 = make_model(preset_a_n(2));
    Workbench wa(*a2);
    auto all = wa.torsion_pair(standard_collection(*a2), {0, 1});
    EXPECT_EQ(all.torsion.size(), 3u);
    EXPECT_TRUE(all.torsionfree.empty());
    auto none = wa.torsion_pair(standard_collection(*a2), {});
    EXPECT_TRUE(none.torsion.empty());
    EXPECT_EQ(none.torsionfree.size(), 3u);
    EXPECT_TRUE(none.verdict.holds());
}

TEST(SimpleMinded, SixConditionsTube)
{
    auto tube = make_model(preset_tube(3));
    Workbench wt(*tube);
    auto r = wt.check_theorem1(named(*tube, {"s1", "s2", "s3"}), {0, 1});
    for (std::size_t i = 0; i < 6; ++i) EXPECT_TRUE(r.conditions[i].holds()) << i << ": " << r.conditions[i].notes;
    EXPECT_TRUE(r.consistent);
}

TEST(SimpleMinded, SixConditionsLoopAlgebra)
{
    auto ky = make_model(preset_ky(8));
    Workbench wk(*ky);
    auto r = wk.check_theorem1(standard_collection(*ky), {0});
    EXPECT_TRUE(r.conditions[3].fails());
    EXPECT_TRUE(r.conditions[5].fails()) << r.conditions[5].notes;
    EXPECT_TRUE(r.consistent);
    for (std::size_t i = 0; i < 6; ++i) EXPECT_NE(r.conditions[i].status, VerdictStatus::Holds) << i << ": " << r.conditions[i].notes;
}

TEST(SimpleMinded, Setups)
{
    auto a2 = make_model(preset_a_n(2));
    Workbench wa(*a2);
    auto u = standard_collection(*a2);
    for (const auto& s : all_subsets(2))
        EXPECT_TRUE(wa.check_setup(wa.subset_terms(u, s), CollectionKind::SMC, 0).holds());
    auto ky = make_model(preset_ky(8));
    Workbench wk(*ky);
    EXPECT_TRUE(wk.check_setup({ky->parse("s1")}, CollectionKind::SMC, 0).fails());
    auto orbit = make_model(preset_orbit(5, 2));
    Workbench wo(*orbit);
    EXPECT_TRUE(wo.check_setup({orbit->parse("(2,2)"), orbit->parse("(4,0)")}, CollectionKind::WSMS, 2).holds());
}

TEST(SimpleMinded, MutationPairs)
{
    auto tube = make_model(preset_tube(3));
    Workbench wt(*tube);
    std::vector<Term> s = {tube->parse("s1"), tube->parse("s2")};
    std::vector<Term> a = {tube->parse("s3")};
    EXPECT_TRUE(wt.check_mutation_pair(a, {tube->parse("[s2;s1;s3][1]")}, s).holds());
    EXPECT_TRUE(wt.check_mutation_pair(a, {tube->parse("s3[2]")}, s).fails());
    EXPECT_TRUE(wt.check_mutation_pair({}, {}, {tube->parse("s1"), tube->parse("s2"), tube->parse("s3")}).holds());
}

TEST(SimpleMinded, Adjacency)
{
    auto a2 = make_model(preset_a_n(2));
    Workbench wa(*a2);
    auto r = wa.check_adjacency(standard_collection(*a2));
    EXPECT_TRUE(r.silting.holds());
    EXPECT_TRUE(r.cosilting.holds());
    // Projectives and injectives of the heart.
    auto pc = labels(*a2, r.projective_coheart);
    EXPECT_NE(std::find(pc.begin(), pc.end(), "s2"), pc.end());
    EXPECT_NE(std::find(pc.begin(), pc.end(), "[s1;s2]"), pc.end());

    auto tube = make_model(preset_tube(3));
    Workbench wt(*tube);
    auto t = wt.check_adjacency(named(*tube, {"s1", "s2", "s3"}));
    EXPECT_TRUE(t.silting.fails());
    EXPECT_TRUE(t.cosilting.fails());
}

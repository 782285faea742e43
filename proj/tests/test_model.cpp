#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quivers.hpp"
#include "smm/model.hpp"

using namespace smm;

namespace {

ModelConfig a_window(std::size_t n, int lo, int hi)
{
    auto c = preset_a_n(n);
    c.window_lo = lo;
    c.window_hi = hi;
    return c;
}

}  // namespace

TEST(Model, CatalogCounts)
{
    EXPECT_EQ(make_model(a_window(2, -1, 1))->enumerate().size(), 9u);
    EXPECT_EQ(make_model(preset_a_n(3))->enumerate().size(), 30u);
    auto t = preset_tube(3);
    EXPECT_EQ(make_model(t)->enumerate().size(), 54u);
    t.cap = 3;
    t.window_lo = t.window_hi = 0;
    EXPECT_EQ(make_model(t)->enumerate().size(), 9u);
    auto o = make_model(preset_orbit(5, 2));
    EXPECT_EQ(o->enumerate().size(), 40u);
}

TEST(Model, LabelsRoundTrip)
{
    for (auto cfg : {preset_a_n(3), preset_tube(3), preset_ky(5), preset_orbit(5, 2)}) {
        auto m = make_model(cfg);
        for (auto t : m->enumerate()) {
            auto name = m->label(t);
            EXPECT_EQ(m->parse(name), m->shift(t, 0)) << name;
        }
    }
}

TEST(Model, ParseAliases)
{
    auto a = make_model(preset_a_n(3));
    EXPECT_EQ(a->label(a->parse("P1")), "[s1;s2;s3]");
    EXPECT_EQ(a->label(a->parse("I2[-1]")), "[s1;s2][-1]");
    EXPECT_EQ(a->label(a->parse("s2[1]")), "s2[1]");
    auto k = make_model(preset_ky(5));
    EXPECT_EQ(k->label(k->parse("x1")), "s1");
    EXPECT_EQ(k->length(k->parse("m3")), 4u);
    EXPECT_EQ(k->cyclic_length(k->parse("x4[1]")), 4u);
    EXPECT_THROW(a->parse("s9"), RepError);
    EXPECT_THROW(a->parse("[s3;s1]"), RepError);
}

TEST(Model, SerreOnA2)
{
    auto m = make_model(preset_a_n(2));
    // S2 is projective, so its Serre image is the injective hull P1 in degree 0.
    EXPECT_EQ(m->label(m->serre(m->parse("s2"))), "[s1;s2]");
    EXPECT_EQ(m->label(m->serre(m->parse("s1"))), "s2[1]");
    EXPECT_EQ(m->label(m->serre(m->parse("[s1;s2][-1]"))), "s1[-1]");
    EXPECT_EQ(m->label(m->tau(m->parse("s1"))), "s2");
}

TEST(Model, SerreDualityOnCatalogs)
{
    for (auto cfg : {a_window(3, -1, 1), preset_tube(2), preset_orbit(5, 2), preset_orbit(3, 1)}) {
        if (cfg.preset == "tube") {
            cfg.cap = 3;
            cfg.window_lo = -1;
            cfg.window_hi = 0;
        }
        auto m = make_model(cfg);
        auto terms = m->enumerate();
        for (auto a : terms) {
            Term sa = m->serre(a);
            for (auto b : terms) EXPECT_EQ(m->hom_dim(a, b), m->hom_dim(b, sa)) << m->label(a) << " " << m->label(b);
        }
    }
    EXPECT_THROW(make_model(preset_ky(4))->serre(Term{0, 0}), RepError);
}

TEST(Model, EulerFormMatchesHomAlternatingSum)
{
    auto m = make_model(a_window(4, 0, 0));
    auto q = fixtures::linear_a(4);
    for (auto a : m->enumerate())
        for (auto b : m->enumerate()) {
            auto da = m->k0(a), db = m->k0(b);
            std::vector<std::size_t> ua(da.begin(), da.end()), ub(db.begin(), db.end());
            long long chi = (long long)m->hom_dim(a, b) - (long long)m->hom_dim(a, m->shift(b, 1));
            EXPECT_EQ(chi, oracle::euler_form(q, ua, ub));
        }
}

TEST(Model, OrbitSerreIsNegativeShift)
{
    for (auto [n, w] : {std::pair<std::size_t, std::size_t>{5, 2}, {3, 1}, {4, 3}}) {
        auto m = make_model(preset_orbit(n, w));
        for (auto t : m->enumerate()) EXPECT_EQ(m->serre(t), m->shift(t, -static_cast<int>(w)));
    }
}

TEST(Model, OrbitFigureObjects)
{
    auto m = make_model(preset_orbit(5, 2));
    Term s1 = m->parse("(2,2)"), s = m->parse("(2.5,3)"), s2 = m->parse("(4,0)");
    Term x1 = m->parse("(7,0)"), x2 = m->parse("(8,0)"), x3 = m->parse("(8,4)");
    EXPECT_EQ(m->shift(x1, 1), m->parse("(10,4)"));
    EXPECT_EQ(m->label(m->parse("(10,4)")), "(2,0)");
    EXPECT_EQ(m->shift(x2, 1), m->parse("(11,4)"));
    EXPECT_EQ(m->label(m->shift(x3, 1)), "(3,4)");
    EXPECT_EQ(m->hom_dim(s, m->shift(x3, 1)), 1u);
    EXPECT_EQ(m->hom_dim(s1, m->shift(x2, 1)), 1u);
    auto cl = m->extension_closure({s1, s2}, 6);
    std::set<std::string> names;
    for (auto t : cl.members) names.insert(m->label(t));
    EXPECT_EQ(names, (std::set<std::string>{"(2,2)", "(2.5,3)", "(4,0)"}));
    EXPECT_FALSE(cl.capped);
    (void)s;
}

TEST(Model, OrbitApproximationsShiftTheReduction)
{
    auto m = make_model(preset_orbit(5, 2));
    std::vector<Term> cls = {m->parse("(2,2)"), m->parse("(2.5,3)"), m->parse("(4,0)")};
    struct Case {
        const char* x;
        std::vector<std::string> source;
        const char* cone;
    };
    for (const auto& c : {Case{"(7,0)", {}, "(2,0)"}, Case{"(8,0)", {"(2,2)"}, "(12.5,1)"},
                          Case{"(8,4)", {"(2.5,3)"}, "(13,4)"}}) {
        Term d = m->shift(m->parse(c.x), 1);
        auto a = m->right_approximation(d, cls);
        std::vector<std::string> src;
        for (auto t : a.summands) src.push_back(m->label(t));
        EXPECT_EQ(src, c.source) << c.x;
        ASSERT_EQ(a.cone.size(), 1u) << c.x;
        EXPECT_EQ(a.cone[0], m->parse(c.cone)) << c.x;
        EXPECT_TRUE(a.verified);
    }
}

TEST(Model, OrbitMixedConeRejected)
{
    auto m = make_model(preset_orbit(3, 1));
    EXPECT_THROW(m->compose(Term{0, 0}, Term{0, 0}, Term{0, 0}, {}, {}), RepError);
}

TEST(Model, LayoutArrowsFollowIrreducibleMaps)
{
    auto m = make_model(a_window(3, 0, 0));
    auto l = m->layout();
    EXPECT_EQ(l.nodes.size(), 6u);
    EXPECT_EQ(l.arrows.size(), 6u);
    for (auto [i, j] : l.arrows) EXPECT_EQ(m->hom_dim(l.nodes[i].term, l.nodes[j].term), 1u);
    auto o = make_model(preset_orbit(5, 2));
    EXPECT_EQ(o->layout().nodes.size(), 40u);
}

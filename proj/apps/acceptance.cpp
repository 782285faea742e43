#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "smm/reduction.hpp"
#include "smm/stability.hpp"

using namespace smm;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double limit_s;  // 0 for no runtime bound
    std::function<Outcome()> run;
};

std::vector<std::string> labels(CategoryModel& m, const std::vector<Term>& ts)
{
    std::vector<std::string> out;
    for (auto t : ts) out.push_back(m.label(t));
    return out;
}

std::string join(const std::vector<std::string>& xs)
{
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
    return "{" + s + "}";
}

Collection named(CategoryModel& m, const std::vector<std::string>& names, CollectionKind kind = CollectionKind::SMC,
                 int w = 0)
{
    Collection c;
    c.kind = kind;
    c.w = w;
    for (const auto& n : names) c.members.push_back(m.parse(n));
    return c;
}

DObject sorted(DObject d)
{
    std::sort(d.begin(), d.end());
    return d;
}

Collection orbit_figure(CategoryModel& m)
{
    return named(m, {"(2,2)", "(4,0)", "(7,0)", "(8,0)", "(8,4)"}, CollectionKind::WSMS, 2);
}

// Standard SMC battery: D^b(A_n) for n <= 3 and the rank-3 tube.
std::vector<ModelConfig> battery()
{
    return {preset_a_n(1), preset_a_n(2), preset_a_n(3), preset_tube(3)};
}

std::string model_name(const ModelConfig& c)
{
    if (c.preset == "a_n") return "A" + std::to_string(c.n);
    if (c.preset == "tube") return "tube" + std::to_string(c.rank);
    if (c.preset == "orbit") return "orbit(" + std::to_string(c.n) + "," + std::to_string(c.w) + ")";
    if (c.preset.empty()) return "quiver" + std::to_string(c.quiver ? c.quiver->vertex_count() : 0);
    return c.preset;
}

Outcome tube_mutation()
{
    auto m = make_model(preset_tube(3));
    Workbench wb(*m);
    auto u = named(*m, {"s1", "s2", "s3"});
    auto r = wb.mutate(u, {0, 1}, Direction::Right);
    if (!r.ok) return {false, "mutation missing an approximation"};
    auto got = labels(*m, r.result.members);
    bool pass = got == std::vector<std::string>{"s1", "s2", "[s2;s1;s3][1]"};
    std::vector<std::string> src;
    if (r.result.history.size() == 1 && r.result.history[0].triangles.size() == 1)
        src = labels(*m, r.result.history[0].triangles[0].source);
    pass = pass && src == std::vector<std::string>{"[s2;s1]"} && r.axioms.holds();
    return {pass, "rho = " + join(got) + ", source " + join(src) + ", axioms " + to_string(r.axioms.status)};
}

Outcome orbit_approximations()
{
    auto m = make_model(preset_orbit(5, 2));
    Workbench wb(*m);
    auto u = orbit_figure(*m);
    auto s = wb.subset_terms(u, {0, 1});
    auto ctx = reduce(wb, s, CollectionKind::WSMS, 2);
    const std::vector<std::vector<std::string>> expected = {{}, {"(2,2)"}, {"(2.5,3)"}};
    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i < 3; ++i) {
        Term x = u.members[i + 2];
        auto r = wb.right_approximation(m->shift(x, 1), s);
        auto src = labels(*m, r.approx.summands);
        bool ok = r.status == ApproxStatus::Found && src == expected[i] &&
                  sorted(r.approx.cone) == sorted(z_shift(wb, ctx, x));
        pass = pass && ok;
        detail += "x" + std::to_string(i + 1) + "[1]: source " + join(src) + " cone " + join(labels(*m, r.approx.cone)) +
                  (ok ? "" : " (mismatch)") + "; ";
    }
    return {pass, detail};
}

Outcome loop_counterexample()
{
    auto m = make_model(preset_ky(8));
    Workbench wb(*m);
    auto u = standard_collection(*m);
    auto r = wb.right_approximation(m->parse("s2[1]"), {m->parse("s1")});
    std::vector<std::string> chain_expected = {"s1"};
    for (int n = 2; n <= 8; ++n) chain_expected.push_back("x" + std::to_string(n));
    bool diverging = r.status == ApproxStatus::Diverging && labels(*m, r.chain) == chain_expected;

    auto pg = phase_gap_check(wb, u, {0});
    bool gap = pg.verdict.fails() && pg.family.size() == 8;
    for (std::size_t n = 0; gap && n < 8; ++n) {
        gap = m->label(pg.family[n]) == "m" + std::to_string(n + 1);
        if (gap && n > 0) gap = compare_phase(pg.family_charges[n], pg.family_charges[n - 1]) == 1;
    }
    auto t1 = wb.check_theorem1(u, {0});
    bool battery = t1.conditions[3].fails() && t1.conditions[5].fails() && t1.consistent;
    std::string row;
    for (const auto& v : t1.conditions) row += to_string(v.status).substr(0, 1);
    return {diverging && gap && battery, "approximation " + to_string(r.status) + " chain " + join(labels(*m, r.chain)) +
                                             ", phase gap " + to_string(pg.verdict.status) + " family " +
                                             join(labels(*m, pg.family)) + ", conditions " + row};
}

Outcome theorem1_battery()
{
    std::size_t runs = 0, inconclusive = 0, disagreements = 0;
    std::string where;
    for (const auto& cfg : battery()) {
        auto m = make_model(cfg);
        Workbench wb(*m);
        auto u = standard_collection(*m);
        for (const auto& sub : all_subsets(u.members.size())) {
            auto r = wb.check_theorem1(u, sub);
            ++runs;
            for (const auto& v : r.conditions) inconclusive += v.status == VerdictStatus::Inconclusive;
            if (!r.consistent) {
                ++disagreements;
                where += " " + model_name(cfg);
            }
        }
    }
    std::ostringstream os;
    os << runs << " instances, " << disagreements << " disagreements, " << inconclusive << " inconclusive conditions"
       << where;
    return {disagreements == 0, os.str()};
}

Outcome round_trip()
{
    std::size_t checked = 0, skipped = 0, failures = 0;
    std::string where;
    auto cfgs = battery();
    cfgs.push_back(preset_a_n(4));
    for (const auto& cfg : cfgs) {
        auto m = make_model(cfg);
        Workbench wb(*m);
        auto u = standard_collection(*m);
        for (const auto& sub : all_subsets(u.members.size())) {
            if (!wb.check_setup(wb.subset_terms(u, sub), u.kind, u.w).holds()) {
                ++skipped;
                continue;
            }
            ++checked;
            auto r = wb.mutate(u, sub, Direction::Right);
            auto l = wb.mutate(u, sub, Direction::Left);
            bool ok = r.ok && l.ok;
            if (ok) {
                auto lr = wb.mutate(r.result, sub, Direction::Left);
                auto rl = wb.mutate(l.result, sub, Direction::Right);
                ok = lr.ok && rl.ok && lr.result.members == u.members && rl.result.members == u.members;
            }
            if (!ok) {
                ++failures;
                where += " " + model_name(cfg);
            }
        }
    }
    std::ostringstream os;
    os << checked << " setups, " << failures << " failures, " << skipped << " skipped (setup not holding)" << where;
    return {failures == 0 && checked > 0, os.str()};
}

Outcome reduce_shift_lift()
{
    std::size_t holds = 0, inconclusive = 0, bad = 0;
    std::string where;
    auto check = [&](Workbench& wb, const Collection& u, const std::vector<std::size_t>& sub, const std::string& name) {
        auto v = verify_reduce_shift_lift(wb, u, sub);
        bool setup = wb.check_setup(wb.subset_terms(u, sub), u.kind, u.w).holds();
        if (v.holds()) ++holds;
        else if (v.status == VerdictStatus::Inconclusive && !setup) ++inconclusive;
        else {
            ++bad;
            where += " " + name;
        }
    };
    for (const auto& cfg : battery()) {
        auto m = make_model(cfg);
        Workbench wb(*m);
        auto u = standard_collection(*m);
        for (const auto& sub : all_subsets(u.members.size())) check(wb, u, sub, model_name(cfg));
    }
    auto o = make_model(preset_orbit(5, 2));
    Workbench wo(*o);
    check(wo, orbit_figure(*o), {0, 1}, "orbit");
    std::ostringstream os;
    os << holds << " hold, " << inconclusive << " inconclusive (setup fails), " << bad << " failing" << where;
    return {bad == 0, os.str()};
}

Outcome bisilting()
{
    std::size_t checked = 0, bad = 0;
    std::string where;
    for (std::size_t n = 1; n <= 4; ++n) {
        auto m = make_model(preset_a_n(n));
        Workbench wb(*m);
        auto u = standard_collection(*m);
        for (const auto& sub : all_subsets(n)) {
            auto r = wb.mutate(u, sub, Direction::Right);
            ++checked;
            bool ok = r.ok;
            if (ok) {
                auto a = wb.check_adjacency(r.result);
                ok = a.silting.holds() && a.cosilting.holds();
            }
            if (!ok) {
                ++bad;
                where += " A" + std::to_string(n);
            }
        }
    }
    std::ostringstream os;
    os << checked << " mutations, " << bad << " not bisilting" << where;
    return {bad == 0, os.str()};
}

Outcome iterability()
{
    auto m = make_model(preset_orbit(5, 2));
    Workbench wb(*m);
    auto tr = iterate_mutation(wb, orbit_figure(*m), {0, 1}, Direction::Right, 20);
    bool certified = !tr.aborted && tr.verdicts.size() >= 20;
    for (const auto& v : tr.verdicts) certified = certified && v.holds();
    const std::size_t period = tr.period.value_or(0);
    std::ostringstream os;
    os << tr.verdicts.size() << " steps certified=" << (certified ? "yes" : "no") << ", period " << period;
    return {certified && period == 14, os.str()};
}

// Signed Euler form of the quiver on K_0 classes.
long long euler(const Quiver& q, const std::vector<long long>& a, const std::vector<long long>& b)
{
    long long s = 0;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) s += a[v] * b[v];
    for (const auto& ar : q.arrows) s -= a[ar.source] * b[ar.target];
    return s;
}

Charge charge_of(const std::vector<Charge>& z, const std::vector<std::size_t>& dims)
{
    Charge c{Rational(0), Rational(0)};
    for (std::size_t i = 0; i < dims.size(); ++i) {
        c.x = c.x + z[i].x * Rational((long long)dims[i]);
        c.y = c.y + z[i].y * Rational((long long)dims[i]);
    }
    return c;
}

struct OracleTally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first;
    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok && failures++ == 0) first = what;
    }
};

Outcome engine_oracles()
{
    Quiver d4;
    d4.vertices = {"1", "2", "3", "4"};
    d4.arrows = {{0, 3, "a"}, {1, 3, "b"}, {2, 3, "c"}};
    ModelConfig d4cfg;
    d4cfg.quiver = d4;
    d4cfg.window_lo = -2;
    d4cfg.window_hi = 2;
    std::vector<ModelConfig> cfgs = {preset_a_n(1),       preset_a_n(2), preset_a_n(3), preset_a_n(4),
                                     preset_tube(3),      preset_ky(8),  d4cfg,         preset_orbit(5, 2),
                                     preset_orbit(3, 1)};
    OracleTally euler_t, serre_t, ar_t, seesaw_t, cone_t;
    std::vector<std::string> used;
    std::mt19937_64 rng(7);
    for (const auto& cfg : cfgs) {
        auto m = make_model(cfg);
        auto cat = m->enumerate();
        if (cat.size() > 60) continue;
        const std::string name = model_name(cfg);
        used.push_back(name + ":" + std::to_string(cat.size()));
        auto tag = [&](Term a, Term b) { return name + " " + m->label(a) + " " + m->label(b); };

        DerivedEngine* eng = m->engine();
        if (eng) {
            // Hom minus Ext is the Euler form of the classes, graded by the shift.
            for (auto a : cat)
                for (auto b : cat) {
                    long long chi = 0;
                    for (int k = a.shift - b.shift - 1; k <= a.shift - b.shift + 2; ++k)
                        chi += (k % 2 == 0 ? 1 : -1) * (long long)m->hom_dim(a, m->shift(b, k));
                    euler_t.expect(chi == euler(eng->quiver(), m->k0(a), m->k0(b)), tag(a, b));
                }
        }
        if (m->has_serre()) {
            for (auto a : cat) {
                Term sa = m->serre(a), ta = m->tau(a);
                for (auto b : cat) {
                    serre_t.expect(m->hom_dim(a, b) == m->hom_dim(b, sa), tag(a, b));
                    ar_t.expect(m->hom_dim(a, m->shift(b, 1)) == m->hom_dim(b, ta), tag(a, b));
                    if (eng)
                        ar_t.expect(euler(eng->quiver(), m->k0(a), m->k0(b)) ==
                                        -euler(eng->quiver(), m->k0(b), m->k0(ta)),
                                    "translate " + tag(a, b));
                }
            }
        }
        if (eng) {
            // Phase seesaw on short exact sequences of subobjects, HN phases decreasing and additive.
            Workbench wb(*m);
            auto u = standard_collection(*m);
            std::vector<Charge> z;
            for (std::size_t i = 0; i < u.members.size(); ++i)
                z.push_back({Rational((long long)(i % 3) - 1), Rational(1 + (long long)(i % 2))});
            HeartStability st(wb, u, CentralCharge{z});
            if (st.supported())
                for (auto t : cat) {
                    if (t.shift != st.heart_shift()) continue;
                    const auto& rep = eng->module(t.id);
                    Charge whole = charge_of(z, rep.dims);
                    for (const auto& sub : st.subobjects(rep)) {
                        if (sub.dims == rep.dims) continue;
                        Charge a = charge_of(z, sub.dims);
                        Charge c{whole.x + (-a.x), whole.y + (-a.y)};
                        seesaw_t.expect(compare_phase(a, whole) == compare_phase(whole, c), name + " " + m->label(t));
                    }
                    auto hn = st.hn_filtration(rep);
                    Charge sum{Rational(0), Rational(0)};
                    bool ok = !hn.inconclusive;
                    for (std::size_t i = 0; i < hn.factors.size(); ++i) {
                        sum = {sum.x + hn.factors[i].charge.x, sum.y + hn.factors[i].charge.y};
                        if (i > 0) ok = ok && compare_phase(hn.factors[i - 1].charge, hn.factors[i].charge) == 1;
                    }
                    seesaw_t.expect(ok && sum == whole, "HN " + name + " " + m->label(t));
                }

            // For f: a -> b with cone c, Hom(x, c) = coker Hom(x, f) + ker Hom(x, f[1]).
            auto rank_of = [&](Term x, Term a, Term b, const std::vector<Scalar>& f) {
                std::size_t ha = m->hom_dim(x, a), hb = m->hom_dim(x, b);
                if (ha == 0 || hb == 0) return std::size_t{0};
                FieldMatrix mat(hb, ha, m->modulus());
                for (std::size_t k = 0; k < ha; ++k) {
                    std::vector<Scalar> e(ha, 0);
                    e[k] = 1;
                    auto col = m->compose(x, a, b, f, e);
                    for (std::size_t r = 0; r < hb; ++r) mat(r, k) = col[r];
                }
                return rank(mat);
            };
            std::vector<Term> heart;
            for (auto t : cat)
                if (t.shift == 0) heart.push_back(t);
            for (auto a : heart)
                for (auto b0 : heart)
                    for (int sb : {0, 1}) {
                        Term b = m->shift(b0, sb);
                        std::size_t h = m->hom_dim(a, b);
                        if (h == 0) continue;
                        std::vector<Scalar> f(h);
                        for (auto& x : f) x = rng() % m->modulus();
                        if (std::all_of(f.begin(), f.end(), [](Scalar x) { return x == 0; })) f[0] = 1;
                        DObject c = m->cone(DMorphism{{a}, {b}, {{f}}});
                        for (auto x : cat) {
                            std::size_t hc = 0;
                            for (auto t : c) hc += m->hom_dim(x, t);
                            Term a1 = m->shift(a, 1), b1 = m->shift(b, 1);
                            std::size_t expect = (m->hom_dim(x, b) - rank_of(x, a, b, f)) +
                                                 (m->hom_dim(x, a1) - rank_of(x, a1, b1, f));
                            cone_t.expect(hc == expect, "cone " + tag(a, b) + " at " + m->label(x));
                        }
                    }
        } else {
            // No composition on orbit categories: exactness bounds on approximation triangles.
            Workbench wb(*m);
            for (auto d : cat)
                for (auto t : cat) {
                    if (t == d || t.shift != 0) continue;
                    auto r = wb.right_approximation(d, {t});
                    if (r.status != ApproxStatus::Found) continue;
                    const auto& src = r.approx.summands;
                    const auto& c = r.approx.cone;
                    auto h = [&](Term x, const DObject& o, int k) {
                        std::size_t s = 0;
                        for (auto y : o) s += m->hom_dim(x, m->shift(y, k));
                        return s;
                    };
                    for (auto x : cat) {
                        std::size_t hs = h(x, src, 0), hd = m->hom_dim(x, d), hc = h(x, c, 0), hs1 = h(x, src, 1);
                        cone_t.expect(hd <= hs + hc && hc <= hd + hs1, "orbit cone " + tag(t, d));
                    }
                    // The approximation is surjective on Hom(t, -), so Hom(t, cone) embeds in Hom(t, src[1]).
                    cone_t.expect(h(t, c, 0) <= h(t, src, 1), "orbit approximation " + tag(t, d));
                }
        }
    }
    std::ostringstream os;
    os << "catalogs";
    for (const auto& u : used) os << " " << u;
    bool pass = true;
    for (auto [label, t] : std::vector<std::pair<std::string, OracleTally*>>{
             {"euler", &euler_t}, {"serre", &serre_t}, {"ar", &ar_t}, {"seesaw", &seesaw_t}, {"cone", &cone_t}}) {
        os << "; " << label << " " << t->checks - t->failures << "/" << t->checks;
        if (t->failures) os << " first failure: " << t->first;
        pass = pass && t->failures == 0 && t->checks > 0;
    }
    return {pass, os.str()};
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "tube mutation", 1, tube_mutation},
        {2, "orbit approximations", 5, orbit_approximations},
        {3, "loop-algebra counterexample", 5, loop_counterexample},
        {4, "six-condition battery", 0, theorem1_battery},
        {5, "mutation round trip", 0, round_trip},
        {6, "reduce-shift-lift", 0, reduce_shift_lift},
        {7, "bisilting after mutation", 0, bisilting},
        {8, "iterated mutation", 0, iterability},
        {9, "engine oracles", 120, engine_oracles},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = c.limit_s == 0 || secs < c.limit_s;
        bool pass = o.pass && in_time;
        failed += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << std::fixed
                  << std::setprecision(2) << secs << " s" << (in_time ? "" : ", over time limit") << "): " << o.detail
                  << "\n"
                  << std::flush;
    }
    std::cout << (failed ? "FAILED " + std::to_string(failed) + " of " : "all passed: ") << criteria.size()
              << " criteria\n";
    return failed ? 1 : 0;
}

#include "smm/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace smm {

namespace {

std::set<Term> canonical(CategoryModel& m, const std::vector<Term>& ts)
{
    std::set<Term> out;
    for (const auto& t : ts) out.insert(m.shift(t, 0));
    return out;
}

std::vector<Term> sorted_canonical(CategoryModel& m, const std::vector<Term>& ts)
{
    std::vector<Term> out;
    for (const auto& t : ts) out.push_back(m.shift(t, 0));
    std::sort(out.begin(), out.end());
    return out;
}

// Drops the summands lying in the given set after shifting them by k.
DObject drop_shifted(CategoryModel& m, const DObject& c, const std::set<Term>& inside, int k)
{
    DObject out;
    for (const auto& t : c)
        if (!inside.count(m.shift(t, k))) out.push_back(t);
    return out;
}

}  // namespace

bool in_reduction(Workbench& wb, const std::vector<Term>& s, CollectionKind kind, int w, Term d)
{
    auto& m = wb.model();
    for (const auto& x : s) {
        if (m.shift(x, 0) == m.shift(d, 0)) return false;
        if (kind == CollectionKind::WSMS) {
            for (int i = 0; i <= w; ++i)
                if (m.hom_dim(m.shift(x, i), d) != 0) return false;
            continue;
        }
        // Hom(d, x[i]) for i <= 0 and Hom(x[i], d) for i >= 0; nonzero only near the shift difference.
        const int r = std::abs(d.shift - x.shift) + 3;
        for (int i = -r; i <= 0; ++i)
            if (m.hom_dim(d, m.shift(x, i)) != 0) return false;
        for (int i = 0; i <= r; ++i)
            if (m.hom_dim(m.shift(x, i), d) != 0) return false;
    }
    return true;
}

bool in_reduction(Workbench& wb, const ReductionContext& ctx, Term d)
{
    return in_reduction(wb, ctx.s, ctx.kind, ctx.w, d);
}

ReductionContext reduce(Workbench& wb, const std::vector<Term>& s, CollectionKind kind, int w)
{
    auto& m = wb.model();
    ReductionContext ctx;
    ctx.s = s;
    ctx.kind = kind;
    ctx.w = w;
    ctx.setup = wb.check_setup(s, kind, w);
    if (!ctx.setup.holds()) throw RepError("SetupFails", "setup does not hold: " + ctx.setup.notes);
    std::set<Term> seen;
    for (const auto& t : wb.catalog())
        if (seen.insert(m.shift(t, 0)).second && in_reduction(wb, ctx, t)) ctx.members.push_back(t);
    auto listed = canonical(m, ctx.members);
    for (const auto& z : ctx.members) {
        auto u = z_shift(wb, ctx, z);
        if (u.size() == 1 && listed.count(m.shift(u[0], 0))) ctx.up[z] = u[0];
        auto d = z_unshift(wb, ctx, z);
        if (d.size() == 1 && listed.count(m.shift(d[0], 0))) ctx.down[z] = d[0];
    }
    return ctx;
}

DObject z_shift(Workbench& wb, const ReductionContext& ctx, Term z)
{
    auto& m = wb.model();
    const auto& cl = wb.closure(ctx.s).members;
    // The evaluation map is an approximation; its redundant part contributes summands in <S>[1].
    DObject c = m.evaluation_cone(m.shift(z, 1), cl, true);
    return drop_shifted(m, c, canonical(m, cl), -1);
}

DObject z_unshift(Workbench& wb, const ReductionContext& ctx, Term z)
{
    auto& m = wb.model();
    const auto& cl = wb.closure(ctx.s).members;
    DObject c = m.evaluation_cone(m.shift(z, -1), cl, false);
    DObject out;
    for (const auto& t : drop_shifted(m, c, canonical(m, cl), 0)) out.push_back(m.shift(t, -1));
    return out;
}

Verdict check_orthogonality_in_reduction(Workbench& wb, const ReductionContext& ctx, const std::vector<Term>& a,
                                         int depth)
{
    auto& m = wb.model();
    Verdict v = wb.base_verdict();
    auto fail = [&](std::vector<Term> wit, std::string why) {
        v.status = VerdictStatus::Fails;
        v.witness = std::move(wit);
        v.notes = std::move(why);
        return v;
    };
    for (const auto& x : a)
        if (!in_reduction(wb, ctx, x)) return fail({x}, "object is not in the reduction");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            const std::size_t h = m.hom_dim(a[i], a[j]);
            if (i == j && h != 1) return fail({a[i]}, "endomorphism ring is not the base field");
            if (i != j && (h != 0 || m.shift(a[i], 0) == m.shift(a[j], 0)))
                return fail({a[i], a[j]}, "nonzero Hom between members");
        }
    const int top = ctx.kind == CollectionKind::WSMS ? ctx.w - 1 : depth;
    for (const auto& x : a) {
        DObject cur{x};
        for (int k = 1; k <= top; ++k) {
            DObject next;
            for (const auto& t : cur)
                for (const auto& u : z_shift(wb, ctx, t)) next.push_back(u);
            cur = next;
            for (const auto& t : cur)
                for (const auto& y : a)
                    if (m.hom_dim(t, y) != 0)
                        return fail({x, y}, "Hom(u<" + std::to_string(k) + ">, u') is nonzero");
        }
    }
    if (ctx.kind == CollectionKind::SMC) v.notes = "orthogonality checked for <k>, k <= " + std::to_string(depth);
    return v;
}

Verdict verify_reduce_shift_lift(Workbench& wb, const Collection& u, const std::vector<std::size_t>& subset)
{
    auto& m = wb.model();
    Verdict v = wb.base_verdict();
    const auto s = wb.subset_terms(u, subset);
    std::set<std::size_t> in_s(subset.begin(), subset.end());
    if (in_s.size() == u.members.size()) {
        v.notes = "S = U";
        return v;
    }
    v.status = VerdictStatus::Fails;
    ReductionContext ctx;
    ctx.s = s;
    ctx.kind = u.kind;
    ctx.w = u.w;
    ctx.setup = wb.check_setup(s, u.kind, u.w);
    if (!ctx.setup.holds()) {
        v.status = VerdictStatus::Inconclusive;
        v.notes = "setup does not hold: " + ctx.setup.notes;
        return v;
    }
    for (Direction dir : {Direction::Right, Direction::Left}) {
        auto r = wb.mutate(u, subset, dir);
        if (!r.ok) {
            v.witness = r.axioms.witness;
            v.notes = to_string(dir) + " mutation failed: " + r.axioms.notes;
            return v;
        }
        for (std::size_t i = 0; i < u.members.size(); ++i) {
            if (in_s.count(i)) continue;
            const Term x = u.members[i];
            if (!in_reduction(wb, ctx, x)) {
                v.witness = {x};
                v.notes = "member outside the reduction";
                return v;
            }
            DObject z = dir == Direction::Right ? z_shift(wb, ctx, x) : z_unshift(wb, ctx, x);
            if (sorted_canonical(m, z) != sorted_canonical(m, {r.result.members[i]})) {
                v.witness = {x, r.result.members[i]};
                v.witness.insert(v.witness.end(), z.begin(), z.end());
                v.notes = to_string(dir) + " mutation differs from the shift in the reduction";
                return v;
            }
        }
    }
    v.status = VerdictStatus::Holds;
    return v;
}

IterationTrace iterate_mutation(Workbench& wb, const Collection& u, const std::vector<std::size_t>& subset,
                                Direction dir, std::size_t n)
{
    auto& m = wb.model();
    IterationTrace tr;
    tr.steps.push_back(u);
    std::map<std::vector<Term>, std::size_t> seen{{sorted_canonical(m, u.members), 0}};
    for (std::size_t k = 1; k <= n; ++k) {
        auto r = wb.mutate(tr.steps.back(), subset, dir);
        if (!r.ok) {
            tr.aborted = true;
            tr.failure = r;
            break;
        }
        tr.steps.push_back(r.result);
        tr.verdicts.push_back(r.axioms);
        auto key = sorted_canonical(m, r.result.members);
        auto [it, fresh] = seen.emplace(key, k);
        if (!fresh && !tr.period) {
            tr.cycle_start = it->second;
            tr.period = k - it->second;
        }
    }
    return tr;
}

}  // namespace smm

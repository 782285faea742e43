#include "smm/stability.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace smm {

Rational::Rational(long long n, long long d) : num(n), den(d)
{
    if (den == 0) throw RepError("InvalidCharge", "zero denominator");
    if (den < 0) num = -num, den = -den;
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
}

Rational Rational::operator+(const Rational& o) const
{
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const
{
    return Rational(num * o.num, den * o.den);
}

std::string Rational::to_string() const
{
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool in_upper_half_plane(const Charge& z)
{
    return z.y.sign() > 0 || (z.y.sign() == 0 && z.x.sign() < 0);
}

int compare_phase(const Charge& a, const Charge& b)
{
    // Within the upper half plane phase(a) < phase(b) iff b is counterclockwise from a.
    __int128 lhs = static_cast<__int128>(a.x.num) * b.y.num * a.y.den * b.x.den;
    __int128 rhs = static_cast<__int128>(a.y.num) * b.x.num * a.x.den * b.y.den;
    __int128 cross = lhs - rhs;  // scaled by positive denominators
    if (cross > 0) return -1;
    if (cross < 0) return 1;
    return 0;
}

double phase_value(const Charge& z)
{
    double x = static_cast<double>(z.x.num) / z.x.den, y = static_cast<double>(z.y.num) / z.y.den;
    return std::atan2(y, x) / std::acos(-1.0);
}

namespace {

std::vector<Scalar> subspace_key(const std::vector<FieldMatrix>& basis)
{
    std::vector<Scalar> key;
    for (const auto& b : basis) {
        key.push_back(-1);
        if (b.cols() == 0) continue;
        auto r = rref_decompose(b.transpose());
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            for (std::size_t j = 0; j < r.rref.cols(); ++j) key.push_back(r.rref(i, j));
    }
    return key;
}

std::size_t total(const std::vector<std::size_t>& d)
{
    return std::accumulate(d.begin(), d.end(), std::size_t{0});
}

}  // namespace

HeartStability::HeartStability(Workbench& wb, const Collection& u, CentralCharge z) : wb_(wb), z_(std::move(z))
{
    engine_ = wb.model().engine();
    if (!engine_ || u.members.empty() || u.kind != CollectionKind::SMC) return;
    if (z_.values.size() != u.members.size()) throw RepError("InvalidCharge", "one charge per member is required");
    for (const auto& c : z_.values)
        if (!in_upper_half_plane(c)) throw RepError("InvalidCharge", "charge outside the upper half plane");
    const auto& q = engine_->quiver();
    if (u.members.size() != q.vertex_count()) return;
    shift_ = u.members[0].shift;
    std::vector<bool> seen(q.vertex_count(), false);
    for (const auto& t : u.members) {
        if (t.shift != shift_) return;
        const auto& m = engine_->module(t.id);
        if (m.total_dim() != 1) return;
        std::size_t v = std::find(m.dims.begin(), m.dims.end(), 1u) - m.dims.begin();
        if (seen[v]) return;
        seen[v] = true;
        vertex_of_member_.push_back(v);
    }
    for (const auto& t : wb.closure(u.members).members) heart_modules_.push_back(t.id);
    supported_ = true;
}

std::vector<long long> HeartStability::multiplicities(const std::vector<std::size_t>& dims) const
{
    std::vector<long long> m;
    for (auto v : vertex_of_member_) m.push_back(static_cast<long long>(dims[v]));
    return m;
}

Charge HeartStability::charge(const std::vector<std::size_t>& dims) const
{
    Charge z;
    auto m = multiplicities(dims);
    for (std::size_t i = 0; i < m.size(); ++i) {
        z.x = z.x + z_.values[i].x * Rational(m[i]);
        z.y = z.y + z_.values[i].y * Rational(m[i]);
    }
    return z;
}

Charge HeartStability::charge(Term h) const
{
    if (h.shift != shift_) throw RepError("NotInHeart", "object is not in the heart");
    return charge(engine_->module(h.id).dims);
}

std::vector<Subobject> HeartStability::subobjects(const Representation& h)
{
    const auto& q = engine_->quiver();
    const Scalar p = h.p;
    std::map<std::vector<Scalar>, Subobject> found;
    auto add = [&](std::vector<FieldMatrix> basis) {
        for (auto& b : basis) b = column_space_basis(b);
        Subobject s{basis, {}};
        for (const auto& b : basis) s.dims.push_back(b.cols());
        if (total(s.dims) == 0) return false;
        return found.emplace(subspace_key(basis), std::move(s)).second;
    };
    std::vector<FieldMatrix> whole;
    for (auto d : h.dims) whole.push_back(FieldMatrix::identity(d, p));
    add(whole);
    for (auto id : heart_modules_) {
        const auto& c = engine_->module(id);
        auto basis = hom_basis(q, c, h);
        std::vector<std::vector<Scalar>> combos;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            std::vector<Scalar> e(basis.size(), 0);
            e[k] = 1;
            combos.push_back(e);
        }
        if (basis.size() > 1) combos.emplace_back(basis.size(), 1);
        for (const auto& co : combos) {
            auto f = combine(basis, co, c, h);
            add(f.blocks);
        }
    }
    // Close under sums.
    bool grew = true;
    while (grew && found.size() < 256) {
        grew = false;
        std::vector<Subobject> cur;
        for (const auto& [k, s] : found) cur.push_back(s);
        for (std::size_t i = 0; i < cur.size() && found.size() < 256; ++i)
            for (std::size_t j = i + 1; j < cur.size() && found.size() < 256; ++j) {
                std::vector<FieldMatrix> sum;
                for (std::size_t v = 0; v < h.dims.size(); ++v)
                    sum.push_back(FieldMatrix::hstack(cur[i].basis[v], cur[j].basis[v]));
                grew = add(sum) || grew;
            }
    }
    std::vector<Subobject> out;
    for (auto& [k, s] : found) out.push_back(std::move(s));
    std::sort(out.begin(), out.end(), [](const Subobject& a, const Subobject& b) {
        return std::make_pair(total(a.dims), a.dims) < std::make_pair(total(b.dims), b.dims);
    });
    return out;
}

HNFiltration HeartStability::hn_filtration(const Representation& h)
{
    if (!supported_) throw RepError("Unsupported", "stability needs a heart of modules");
    HNFiltration res;
    const auto& q = engine_->quiver();
    Representation cur = h;
    while (!cur.is_zero()) {
        auto subs = subobjects(cur);
        const Subobject* best = nullptr;
        Charge bz;
        for (const auto& s : subs) {
            Charge z = charge(s.dims);
            int c = best ? compare_phase(z, bz) : 1;
            if (c > 0 || (c == 0 && total(s.dims) > total(best->dims))) {
                best = &s;
                bz = z;
            }
        }
        HNFactor f{subrepresentation(q, cur, best->basis), multiplicities(best->dims), bz};
        if (!res.factors.empty() && compare_phase(res.factors.back().charge, bz) <= 0) res.inconclusive = true;
        res.factors.push_back(std::move(f));
        if (total(best->dims) == cur.total_dim()) break;
        std::vector<FieldMatrix> proj;
        for (const auto& b : best->basis) proj.push_back(cokernel_projection(b));
        cur = quotient_representation(q, cur, proj);
    }
    return res;
}

bool HeartStability::semistable(const Representation& h)
{
    return hn_filtration(h).factors.size() <= 1;
}

CentralCharge canonical_charge(const Collection& u, const std::vector<std::size_t>& subset)
{
    CentralCharge z;
    std::set<std::size_t> in_s(subset.begin(), subset.end());
    for (std::size_t i = 0; i < u.members.size(); ++i)
        z.values.push_back(in_s.count(i) ? Charge{Rational(-1), Rational(0)} : Charge{Rational(0), Rational(1)});
    return z;
}

PhaseGapResult phase_gap_check(Workbench& wb, const Collection& u, const std::vector<std::size_t>& subset)
{
    PhaseGapResult res;
    res.verdict = wb.base_verdict();
    auto& model = wb.model();
    if (subset.size() == u.members.size()) {
        res.verdict.notes = "every simple has phase 1";
        return res;
    }
    HeartStability st(wb, u, canonical_charge(u, subset));
    if (!st.supported()) {
        res.verdict.status = VerdictStatus::Inconclusive;
        res.verdict.notes = "phase gap is computed only on hearts of modules";
        return res;
    }
    auto tp = wb.torsion_pair(u, subset);
    auto* e = model.engine();
    const std::size_t cap = model.cap();
    // Maximal HN phase over torsionfree objects, grouped by cyclic length.
    std::map<std::size_t, std::pair<Charge, Term>> best_at;
    std::optional<std::pair<Charge, Term>> best;
    // Every catalog module at the heart shift lies in the heart; add those left out by a truncated closure.
    std::vector<Term> candidates = tp.torsionfree;
    std::set<Term> listed(candidates.begin(), candidates.end());
    const auto s = wb.subset_terms(u, subset);
    for (const auto& t : wb.catalog()) {
        if (t.shift != st.heart_shift() || listed.count(t)) continue;
        bool perp = true;
        for (const auto& x : s) perp = perp && model.hom_dim(x, t) == 0;
        if (perp && listed.insert(t).second) candidates.push_back(t);
    }
    for (const auto& f : candidates) {
        auto hn = st.hn_filtration(e->module(f.id));
        if (hn.inconclusive) {
            res.verdict.status = VerdictStatus::Inconclusive;
            res.verdict.notes = "HN filtration not certified";
            return res;
        }
        const Charge top = hn.factors.front().charge;
        std::size_t k = model.cyclic_length(f);
        auto it = best_at.find(k);
        if (it == best_at.end() || compare_phase(top, it->second.first) > 0) best_at[k] = {top, f};
        if (!best || compare_phase(top, best->first) > 0) best = {{top, f}};
    }
    if (!best) {
        res.verdict.notes = "torsionfree class is empty";
        return res;
    }
    if (model.capped_family()) {
        // Running maxima phi_k over objects of cyclic length at most k.
        std::vector<std::pair<Charge, Term>> run;
        std::optional<std::pair<Charge, Term>> acc;
        std::vector<bool> raised;
        for (std::size_t k = 0; k <= cap; ++k) {
            auto it = best_at.find(k);
            bool up = false;
            if (it != best_at.end() && (!acc || compare_phase(it->second.first, acc->first) > 0)) {
                acc = it->second;
                up = true;
            }
            raised.push_back(up);
            if (acc) run.push_back(*acc);
        }
        std::size_t start = cap;
        while (start > 1 && raised[start - 1]) --start;
        if (raised[cap] && cap - start + 1 >= 3) {
            res.verdict.status = VerdictStatus::Fails;
            res.verdict.notes = "maximal phases of torsionfree objects increase strictly up to the cap";
            for (std::size_t k = start; k <= cap; ++k) {
                const auto& [z, t] = best_at.at(k);
                res.family.push_back(t);
                res.family_charges.push_back(z);
            }
            res.verdict.witness = res.family;
            return res;
        }
    }
    res.phi = best->first;
    res.verdict.witness = {best->second};
    res.verdict.notes = "phase gap below " + std::to_string(phase_value(best->first));
    if (tp.verdict.status == VerdictStatus::Inconclusive) res.verdict.notes += " on the capped heart catalog";
    return res;
}

std::string charge_svg(const std::vector<std::pair<std::string, Charge>>& points)
{
    double r = 1;
    for (const auto& [l, z] : points)
        r = std::max({r, std::fabs(static_cast<double>(z.x.num) / z.x.den), static_cast<double>(z.y.num) / z.y.den});
    const double size = 400, scale = (size / 2 - 40) / r, ox = size / 2, oy = size - 40;
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
    s << "<line x1=\"0\" y1=\"" << oy << "\" x2=\"" << size << "\" y2=\"" << oy << "\" stroke=\"gray\"/>\n";
    s << "<line x1=\"" << ox << "\" y1=\"0\" x2=\"" << ox << "\" y2=\"" << size << "\" stroke=\"gray\"/>\n";
    for (const auto& [label, z] : points) {
        double x = ox + scale * static_cast<double>(z.x.num) / z.x.den;
        double y = oy - scale * static_cast<double>(z.y.num) / z.y.den;
        s << "<line x1=\"" << ox << "\" y1=\"" << oy << "\" x2=\"" << x << "\" y2=\"" << y
          << "\" stroke=\"steelblue\"/>\n";
        s << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"steelblue\"/>\n";
        s << "<text x=\"" << x + 4 << "\" y=\"" << y - 4 << "\" font-size=\"11\">" << label << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace smm

#include "smm/derived.hpp"

#include <algorithm>
#include <set>

namespace smm {

DObject normalized(DObject d)
{
    std::sort(d.begin(), d.end());
    return d;
}

DerivedEngine::DerivedEngine(AlgebraSpec alg, Scalar p, std::uint64_t seed) : alg_(std::move(alg)), p_(p), rng_(seed)
{
    alg_.quiver.validate();
}

std::optional<std::size_t> DerivedEngine::find(const Representation& r)
{
    auto it = by_dims_.find(r.dims);
    if (it == by_dims_.end()) return std::nullopt;
    for (auto id : it->second)
        if (modules_[id] == r || is_isomorphic(alg_.quiver, modules_[id], r, rng_)) return id;
    return std::nullopt;
}

std::size_t DerivedEngine::find_or_add(const Representation& r)
{
    if (auto id = find(r)) return *id;
    r.validate(alg_.quiver);
    if (r.p != p_) throw RepError("ModulusMismatch", "module modulus differs from the model");
    modules_.push_back(r);
    by_dims_[r.dims].push_back(modules_.size() - 1);
    return modules_.size() - 1;
}

std::vector<std::size_t> DerivedEngine::register_summands(const Representation& r)
{
    std::vector<std::size_t> ids;
    for (const auto& piece : decompose_flat(alg_.quiver, r, rng_)) ids.push_back(find_or_add(piece));
    return ids;
}

std::size_t DerivedEngine::cyclic_length(std::size_t id) const
{
    return smm::cyclic_length(alg_.quiver, modules_.at(id));
}

DerivedEngine::PairCache& DerivedEngine::pair(std::size_t a, std::size_t b)
{
    return pairs_[{a, b}];
}

const std::vector<RepMorphism>& DerivedEngine::hom_basis_of(std::size_t a, std::size_t b)
{
    auto& pc = pair(a, b);
    if (!pc.hom_ready) {
        pc.hom = smm::hom_basis(alg_.quiver, modules_.at(a), modules_.at(b));
        std::size_t flat = 0;
        for (std::size_t v = 0; v < alg_.quiver.vertex_count(); ++v) flat += modules_[a].dims[v] * modules_[b].dims[v];
        pc.coords = HomCoordinates(pc.hom, flat, p_);
        pc.hom_ready = true;
    }
    return pc.hom;
}

const ExtSpace& DerivedEngine::ext_space(std::size_t a, std::size_t b)
{
    auto& pc = pair(a, b);
    if (!pc.ext) pc.ext = ExtSpace(alg_.quiver, modules_.at(a), modules_.at(b));
    return *pc.ext;
}

RepMorphism DerivedEngine::hom_element(std::size_t a, std::size_t b, const std::vector<Scalar>& coords)
{
    return combine(hom_basis_of(a, b), coords, modules_[a], modules_[b]);
}

std::vector<Scalar> DerivedEngine::hom_coordinates(std::size_t a, std::size_t b, const RepMorphism& f)
{
    hom_basis_of(a, b);
    return pair(a, b).coords(f);
}

std::size_t DerivedEngine::hom_dim(Term a, Term b)
{
    int deg = b.shift - a.shift;
    if (deg == 0) return hom_basis_of(a.id, b.id).size();
    if (deg == 1) return ext_space(a.id, b.id).dim();
    return 0;
}

const std::vector<std::vector<Scalar>>& DerivedEngine::basis_products(Term x, Term y, Term z)
{
    const int df = y.shift - x.shift, dg = z.shift - y.shift;
    auto key = std::make_tuple(x.id, y.id, z.id, df, dg);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
    std::vector<std::vector<Scalar>> table;
    const std::size_t nf = hom_dim(x, y), ng = hom_dim(y, z), nz = hom_dim(x, z);
    const auto& q = alg_.quiver;
    for (std::size_t i = 0; i < ng; ++i) {
        for (std::size_t j = 0; j < nf; ++j) {
            std::vector<Scalar> e_g(ng, 0), e_f(nf, 0);
            e_g[i] = 1;
            e_f[j] = 1;
            std::vector<Scalar> out(nz, 0);
            if (df == 0 && dg == 0) {
                out = hom_coordinates(x.id, z.id, smm::compose(hom_basis_of(y.id, z.id)[i], hom_basis_of(x.id, y.id)[j]));
            } else if (df == 0 && dg == 1) {
                Cocycle xi = ext_space(y.id, z.id).basis_cocycle(i);
                out = ext_space(x.id, z.id).coordinates(pullback(q, xi, hom_basis_of(x.id, y.id)[j]));
            } else if (df == 1 && dg == 0) {
                Cocycle xi = ext_space(x.id, y.id).basis_cocycle(j);
                out = ext_space(x.id, z.id).coordinates(pushforward(q, hom_basis_of(y.id, z.id)[i], xi));
            }
            table.push_back(std::move(out));
        }
    }
    return products_.emplace(key, std::move(table)).first->second;
}

std::vector<Scalar> DerivedEngine::compose(Term x, Term y, Term z, const std::vector<Scalar>& g,
                                           const std::vector<Scalar>& f)
{
    const std::size_t nz = hom_dim(x, z);
    std::vector<Scalar> out(nz, 0);
    if (nz == 0 || g.empty() || f.empty()) return out;
    const auto& table = basis_products(x, y, z);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!g[i]) continue;
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (!f[j]) continue;
            Scalar c = mul_mod(g[i], f[j], p_);
            const auto& v = table[i * f.size() + j];
            for (std::size_t k = 0; k < nz; ++k)
                if (v[k]) out[k] = add_mod(out[k], mul_mod(c, v[k], p_), p_);
        }
    }
    return out;
}

const std::vector<std::vector<Scalar>>& DerivedEngine::radical(Term a, Term b)
{
    auto key = std::make_pair(a, b);
    auto it = radicals_.find(key);
    if (it != radicals_.end()) return it->second;
    std::vector<std::vector<Scalar>> basis;
    const std::size_t n = hom_dim(a, b);
    if (a == b) {
        EndRadical er = end_radical(alg_.quiver, modules_.at(a.id));
        for (const auto& r : er.radical_basis) basis.push_back(hom_coordinates(a.id, a.id, r));
    } else {
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Scalar> e(n, 0);
            e[k] = 1;
            basis.push_back(std::move(e));
        }
    }
    return radicals_.emplace(key, std::move(basis)).first->second;
}

namespace {

struct Stalk {
    Representation rep;
    std::vector<std::size_t> terms;                 // indices into the DObject
    std::vector<std::vector<std::size_t>> offsets;  // per term, per vertex
};

}  // namespace

DObject DerivedEngine::cone(const DMorphism& f)
{
    const auto& q = alg_.quiver;
    const std::size_t nv = q.vertex_count();
    if (f.source.empty() && f.target.empty()) return {};
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto* side : {&f.source, &f.target})
        for (const auto& t : *side) {
            if (first) lo = hi = t.shift, first = false;
            lo = std::min(lo, t.shift);
            hi = std::max(hi, t.shift);
        }

    auto stalk = [&](const DObject& obj, int t) {
        Stalk s{Representation::zero(q, p_), {}, {}};
        for (std::size_t k = 0; k < obj.size(); ++k) {
            if (obj[k].shift != t) continue;
            s.terms.push_back(k);
            s.offsets.push_back(s.rep.dims);
            s.rep = direct_sum(q, s.rep, modules_.at(obj[k].id));
        }
        return s;
    };
    auto degree0 = [&](const Stalk& xs, const Stalk& ys) {
        RepMorphism m = RepMorphism::zero(xs.rep, ys.rep);
        for (std::size_t a = 0; a < ys.terms.size(); ++a)
            for (std::size_t b = 0; b < xs.terms.size(); ++b) {
                const auto& c = f.components[ys.terms[a]][xs.terms[b]];
                if (is_zero_vector(c)) continue;
                RepMorphism piece = hom_element(f.source[xs.terms[b]].id, f.target[ys.terms[a]].id, c);
                for (std::size_t v = 0; v < nv; ++v) m.blocks[v].add_block(ys.offsets[a][v], xs.offsets[b][v], piece.blocks[v]);
            }
        return m;
    };
    auto degree1 = [&](const Stalk& xs, const Stalk& ys) {
        Cocycle xi;
        for (const auto& ar : q.arrows) xi.emplace_back(ys.rep.dims[ar.target], xs.rep.dims[ar.source], p_);
        for (std::size_t a = 0; a < ys.terms.size(); ++a)
            for (std::size_t b = 0; b < xs.terms.size(); ++b) {
                const auto& c = f.components[ys.terms[a]][xs.terms[b]];
                if (is_zero_vector(c)) continue;
                Cocycle piece = ext_space(f.source[xs.terms[b]].id, f.target[ys.terms[a]].id).cocycle(c);
                for (std::size_t k = 0; k < q.arrows.size(); ++k)
                    xi[k].add_block(ys.offsets[a][q.arrows[k].target], xs.offsets[b][q.arrows[k].source], piece[k]);
            }
        return xi;
    };

    // Cohomology of the cone in degree t is an extension of ker f0_{t-1} by coker f0_t,
    // classified by the degree-one part of f restricted and projected accordingly.
    std::map<int, Factorization> fac;
    for (int t = lo; t <= hi; ++t) fac[t] = factor_morphism(q, degree0(stalk(f.source, t), stalk(f.target, t)));
    DObject out;
    for (int t = lo; t <= hi + 1; ++t) {
        Representation k = t - 1 >= lo ? fac[t - 1].kernel : Representation::zero(q, p_);
        Representation c = t <= hi ? fac[t].cokernel : Representation::zero(q, p_);
        if (k.is_zero() && c.is_zero()) continue;
        Cocycle zeta;
        if (!k.is_zero() && !c.is_zero()) {
            Cocycle f1 = degree1(stalk(f.source, t - 1), stalk(f.target, t));
            zeta = pushforward(q, fac[t].cokernel_projection, pullback(q, f1, fac[t - 1].kernel_inclusion));
        } else {
            for (const auto& ar : q.arrows) zeta.emplace_back(c.dims[ar.target], k.dims[ar.source], p_);
        }
        Representation z = middle_term(q, k, c, zeta).middle;
        for (auto id : register_summands(z)) out.push_back({id, t});
    }
    return normalized(out);
}

namespace {

std::vector<Scalar> unit(std::size_t n, std::size_t k)
{
    std::vector<Scalar> e(n, 0);
    e[k] = 1;
    return e;
}

}  // namespace

Approximation DerivedEngine::right_approximation(Term d, const std::vector<Term>& candidates)
{
    std::vector<Term> c;
    for (const auto& t : candidates)
        if (hom_dim(t, d) > 0) c.push_back(t);
    std::sort(c.begin(), c.end(), [this](const Term& a, const Term& b) {
        return std::make_tuple(length(a.id), a.id, a.shift) < std::make_tuple(length(b.id), b.id, b.shift);
    });
    c.erase(std::unique(c.begin(), c.end()), c.end());

    Approximation res;
    res.object = d;
    for (const auto& l : c) {
        const std::size_t h = hom_dim(l, d);
        VectorSpan span(h, p_);
        for (const auto& l2 : c) {
            const std::size_t h2 = hom_dim(l2, d);
            for (const auto& r : radical(l, l2))
                for (std::size_t g = 0; g < h2 && span.dim() < h; ++g) span.insert(compose(l, l2, d, unit(h2, g), r));
        }
        for (std::size_t k = 0; k < h && span.dim() < h; ++k) {
            auto e = unit(h, k);
            if (span.insert(e)) {
                res.summands.push_back(l);
                res.components.push_back(e);
            }
        }
    }
    // Approximation property against every candidate.
    res.verified = true;
    for (const auto& l : c) {
        const std::size_t h = hom_dim(l, d);
        VectorSpan span(h, p_);
        for (std::size_t s = 0; s < res.summands.size() && span.dim() < h; ++s) {
            const Term& ls = res.summands[s];
            const std::size_t hr = hom_dim(l, ls);
            for (std::size_t r = 0; r < hr && span.dim() < h; ++r)
                span.insert(compose(l, ls, d, res.components[s], unit(hr, r)));
        }
        if (span.dim() < h) res.verified = false;
    }
    DMorphism m{res.summands, {d}, {std::vector<std::vector<Scalar>>(res.summands.size())}};
    for (std::size_t s = 0; s < res.summands.size(); ++s) m.components[0][s] = res.components[s];
    res.cone = cone(m);
    return res;
}

Approximation DerivedEngine::left_approximation(Term d, const std::vector<Term>& candidates)
{
    std::vector<Term> c;
    for (const auto& t : candidates)
        if (hom_dim(d, t) > 0) c.push_back(t);
    std::sort(c.begin(), c.end(), [this](const Term& a, const Term& b) {
        return std::make_tuple(length(a.id), a.id, a.shift) < std::make_tuple(length(b.id), b.id, b.shift);
    });
    c.erase(std::unique(c.begin(), c.end()), c.end());

    Approximation res;
    res.object = d;
    for (const auto& l : c) {
        const std::size_t h = hom_dim(d, l);
        VectorSpan span(h, p_);
        for (const auto& l2 : c) {
            const std::size_t h2 = hom_dim(d, l2);
            for (const auto& r : radical(l2, l))
                for (std::size_t g = 0; g < h2 && span.dim() < h; ++g) span.insert(compose(d, l2, l, r, unit(h2, g)));
        }
        for (std::size_t k = 0; k < h && span.dim() < h; ++k) {
            auto e = unit(h, k);
            if (span.insert(e)) {
                res.summands.push_back(l);
                res.components.push_back(e);
            }
        }
    }
    res.verified = true;
    for (const auto& l : c) {
        const std::size_t h = hom_dim(d, l);
        VectorSpan span(h, p_);
        for (std::size_t s = 0; s < res.summands.size() && span.dim() < h; ++s) {
            const Term& ls = res.summands[s];
            const std::size_t hr = hom_dim(ls, l);
            for (std::size_t r = 0; r < hr && span.dim() < h; ++r)
                span.insert(compose(d, ls, l, unit(hr, r), res.components[s]));
        }
        if (span.dim() < h) res.verified = false;
    }
    DMorphism m{{d}, res.summands, {}};
    for (std::size_t s = 0; s < res.summands.size(); ++s) m.components.push_back({res.components[s]});
    res.cone = cone(m);
    return res;
}

DObject DerivedEngine::evaluation_cone(Term d, const std::vector<Term>& candidates, bool right)
{
    std::vector<Term> c = candidates;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    DMorphism m;
    if (right) {
        m.target = {d};
        m.components.resize(1);
        for (const auto& l : c) {
            const std::size_t h = hom_dim(l, d);
            for (std::size_t k = 0; k < h; ++k) {
                m.source.push_back(l);
                m.components[0].push_back(unit(h, k));
            }
        }
    } else {
        m.source = {d};
        for (const auto& l : c) {
            const std::size_t h = hom_dim(d, l);
            for (std::size_t k = 0; k < h; ++k) {
                m.target.push_back(l);
                m.components.push_back({unit(h, k)});
            }
        }
    }
    return cone(m);
}

Approximation DerivedEngine::minimize_right(const Approximation& a)
{
    Approximation res = a;
    const Term d = a.object;
    bool removed = true;
    while (removed) {
        removed = false;
        for (std::size_t k = 0; k < res.summands.size(); ++k) {
            const Term lk = res.summands[k];
            const std::size_t h = hom_dim(lk, d);
            VectorSpan span(h, p_);
            for (std::size_t j = 0; j < res.summands.size(); ++j) {
                if (j == k) continue;
                const Term lj = res.summands[j];
                const std::size_t hr = hom_dim(lk, lj);
                for (std::size_t r = 0; r < hr; ++r) span.insert(compose(lk, lj, d, res.components[j], unit(hr, r)));
            }
            for (const auto& r : radical(lk, lk)) span.insert(compose(lk, lk, d, res.components[k], r));
            if (span.contains(res.components[k])) {
                res.summands.erase(res.summands.begin() + k);
                res.components.erase(res.components.begin() + k);
                removed = true;
                break;
            }
        }
    }
    DMorphism m{res.summands, {d}, {std::vector<std::vector<Scalar>>(res.summands.size())}};
    for (std::size_t s = 0; s < res.summands.size(); ++s) m.components[0][s] = res.components[s];
    res.cone = cone(m);
    return res;
}

TermClosure DerivedEngine::extension_closure(const std::vector<Term>& gens, std::size_t cap, std::size_t max_members)
{
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (hom_dim(gens[i], gens[i]) != 1)
            throw RepError("NonSemibrick", "generator " + std::to_string(i) + " is not a brick with End = F_p");
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (gens[i] != gens[j] && hom_dim(gens[i], gens[j]) != 0)
                throw RepError("NonSemibrick",
                               "generators " + std::to_string(i) + " and " + std::to_string(j) + " are not Hom-orthogonal");
    }
    TermClosure res;
    std::set<Term> seen;
    for (const auto& g : gens)
        if (seen.insert(g).second) res.members.push_back(g);
    std::set<std::pair<std::size_t, std::size_t>> done;
    std::uniform_int_distribution<Scalar> dist(1, p_ - 1);
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t n = res.members.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!done.insert({i, j}).second) continue;
                if (res.members.size() >= max_members) {
                    res.capped = true;
                    grew = false;
                    break;
                }
                // Extensions a -> e -> b -> a[1] with e = cone(b -> a[1])[-1].
                const Term a = res.members[i], b = res.members[j];
                const Term a1{a.id, a.shift + 1};
                const std::size_t h = hom_dim(b, a1);
                if (h == 0) continue;
                std::vector<std::vector<Scalar>> maps;
                for (std::size_t k = 0; k < h; ++k) maps.push_back(unit(h, k));
                if (h > 1) {
                    maps.emplace_back(h, 1);
                    std::vector<Scalar> r(h);
                    for (auto& x : r) x = dist(rng_);
                    maps.push_back(r);
                }
                for (const auto& m : maps) {
                    for (const auto& t : cone(DMorphism{{b}, {a1}, {{m}}})) {
                        Term e{t.id, t.shift - 1};
                        if (cyclic_length(e.id) > cap || res.members.size() >= max_members) {
                            res.capped = true;
                            continue;
                        }
                        if (seen.insert(e).second) {
                            res.members.push_back(e);
                            grew = true;
                        }
                    }
                }
            }
    }
    std::stable_sort(res.members.begin(), res.members.end(), [this](const Term& x, const Term& y) {
        return std::make_tuple(length(x.id), x.shift, x.id) < std::make_tuple(length(y.id), y.shift, y.id);
    });
    return res;
}

}  // namespace smm

#include "smm/rep.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace smm {

std::size_t Quiver::vertex_index(const std::string& name) const
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return i;
    throw RepError("UnknownVertex", "unknown vertex '" + name + "'");
}

std::vector<bool> Quiver::cyclic_vertices() const
{
    const std::size_t n = vertices.size();
    // reach[i][j]: a nonempty path i -> j exists.
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (const auto& a : arrows) reach[a.source][a.target] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = true;
    std::vector<bool> cyc(n);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = reach[i][i];
    return cyc;
}

bool Quiver::has_oriented_cycle() const
{
    auto c = cyclic_vertices();
    return std::any_of(c.begin(), c.end(), [](bool b) { return b; });
}

void Quiver::validate() const
{
    if (vertices.empty()) throw RepError("InvalidQuiver", "quiver has no vertices");
    std::set<std::string> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size()) throw RepError("InvalidQuiver", "duplicate vertex names");
    for (const auto& a : arrows)
        if (a.source >= vertices.size() || a.target >= vertices.size())
            throw RepError("InvalidQuiver", "arrow endpoint is not a declared vertex");
}

std::size_t Representation::total_dim() const
{
    std::size_t s = 0;
    for (auto d : dims) s += d;
    return s;
}

Representation Representation::zero(const Quiver& q, Scalar p)
{
    Representation r;
    r.p = p;
    r.dims.assign(q.vertex_count(), 0);
    for (std::size_t a = 0; a < q.arrows.size(); ++a) r.mats.emplace_back(0, 0, p);
    return r;
}

Representation Representation::simple(const Quiver& q, std::size_t vertex, Scalar p)
{
    Representation r = zero(q, p);
    r.dims[vertex] = 1;
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        r.mats[a] = FieldMatrix(r.dims[q.arrows[a].target], r.dims[q.arrows[a].source], p);
    return r;
}

void Representation::validate(const Quiver& q) const
{
    if (dims.size() != q.vertex_count() || mats.size() != q.arrows.size())
        throw RepError("AlgebraMismatch", "representation does not match the quiver");
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& m = mats[a];
        if (m.modulus() != p) throw RepError("ModulusMismatch", "arrow matrix modulus differs from representation");
        if (m.rows() != dims[q.arrows[a].target] || m.cols() != dims[q.arrows[a].source])
            throw RepError("AlgebraMismatch", "arrow matrix has the wrong shape");
    }
}

Representation direct_sum(const Quiver& q, const Representation& a, const Representation& b)
{
    Representation r;
    r.p = a.p;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) r.dims.push_back(a.dims[v] + b.dims[v]);
    for (std::size_t k = 0; k < q.arrows.size(); ++k) r.mats.push_back(FieldMatrix::direct_sum(a.mats[k], b.mats[k]));
    return r;
}

bool RepMorphism::is_zero() const
{
    return std::all_of(blocks.begin(), blocks.end(), [](const FieldMatrix& m) { return m.is_zero(); });
}

bool RepMorphism::commutes(const Quiver& q) const
{
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& ar = q.arrows[a];
        if (!(blocks[ar.target] * source.mats[a] == target.mats[a] * blocks[ar.source])) return false;
    }
    return true;
}

RepMorphism RepMorphism::zero(const Representation& m, const Representation& n)
{
    RepMorphism f{m, n, {}};
    for (std::size_t v = 0; v < m.dims.size(); ++v) f.blocks.emplace_back(n.dims[v], m.dims[v], m.p);
    return f;
}

RepMorphism RepMorphism::identity(const Representation& m)
{
    RepMorphism f{m, m, {}};
    for (std::size_t v = 0; v < m.dims.size(); ++v) f.blocks.push_back(FieldMatrix::identity(m.dims[v], m.p));
    return f;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f)
{
    RepMorphism h{f.source, g.target, {}};
    for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(g.blocks[v] * f.blocks[v]);
    return h;
}

RepMorphism combine(const std::vector<RepMorphism>& basis, const std::vector<Scalar>& coeffs,
                    const Representation& m, const Representation& n)
{
    RepMorphism f = RepMorphism::zero(m, n);
    for (std::size_t k = 0; k < basis.size() && k < coeffs.size(); ++k) {
        if (!coeffs[k]) continue;
        for (std::size_t v = 0; v < f.blocks.size(); ++v) f.blocks[v] = f.blocks[v] + basis[k].blocks[v].scaled(coeffs[k]);
    }
    return f;
}

FieldMatrix total_matrix(const RepMorphism& f)
{
    std::size_t r = f.target.total_dim(), c = f.source.total_dim();
    FieldMatrix t(r, c, f.source.p);
    std::size_t ro = 0, co = 0;
    for (const auto& b : f.blocks) {
        t.set_block(ro, co, b);
        ro += b.rows();
        co += b.cols();
    }
    return t;
}

bool is_isomorphism(const RepMorphism& f)
{
    return std::all_of(f.blocks.begin(), f.blocks.end(), [](const FieldMatrix& b) { return is_invertible(b); });
}

std::vector<Scalar> flatten(const std::vector<FieldMatrix>& blocks)
{
    std::vector<Scalar> v;
    for (const auto& b : blocks) v.insert(v.end(), b.data().begin(), b.data().end());
    return v;
}

namespace {

void check_pair(const Quiver& q, const Representation& m, const Representation& n)
{
    m.validate(q);
    n.validate(q);
    if (m.p != n.p) throw RepError("ModulusMismatch", "representations over different moduli");
}

// The map delta: (+)_v Hom(M_v, N_v) -> (+)_a Hom(M_i, N_j), phi -> phi_j M_a - N_a phi_i.
struct DeltaLayout {
    std::vector<std::size_t> vert_off;
    std::vector<std::size_t> arrow_off;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
};

DeltaLayout delta_layout(const Quiver& q, const Representation& m, const Representation& n)
{
    DeltaLayout l;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        l.vert_off.push_back(l.unknowns);
        l.unknowns += n.dims[v] * m.dims[v];
    }
    for (const auto& a : q.arrows) {
        l.arrow_off.push_back(l.equations);
        l.equations += n.dims[a.target] * m.dims[a.source];
    }
    return l;
}

FieldMatrix delta_matrix(const Quiver& q, const Representation& m, const Representation& n, const DeltaLayout& l)
{
    const Scalar p = m.p;
    FieldMatrix d(l.equations, l.unknowns, p);
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        for (std::size_t r = 0; r < n.dims[v]; ++r) {
            for (std::size_t c = 0; c < m.dims[v]; ++c) {
                std::size_t col = l.vert_off[v] + r * m.dims[v] + c;
                for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                    const auto& ar = q.arrows[a];
                    std::size_t mi = m.dims[ar.source];
                    if (ar.target == v) {
                        for (std::size_t k = 0; k < mi; ++k) {
                            Scalar x = m.mats[a](c, k);
                            if (x) {
                                std::size_t row = l.arrow_off[a] + r * mi + k;
                                d(row, col) = add_mod(d(row, col), x, p);
                            }
                        }
                    }
                    if (ar.source == v) {
                        for (std::size_t k = 0; k < n.dims[ar.target]; ++k) {
                            Scalar x = n.mats[a](k, r);
                            if (x) {
                                std::size_t row = l.arrow_off[a] + k * mi + c;
                                d(row, col) = sub_mod(d(row, col), x, p);
                            }
                        }
                    }
                }
            }
        }
    }
    return d;
}

std::vector<FieldMatrix> unflatten_blocks(const std::vector<Scalar>& v, const std::vector<std::size_t>& rows,
                                          const std::vector<std::size_t>& cols, Scalar p)
{
    std::vector<FieldMatrix> out;
    std::size_t off = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        FieldMatrix b(rows[k], cols[k], p);
        for (std::size_t i = 0; i < rows[k]; ++i)
            for (std::size_t j = 0; j < cols[k]; ++j) b(i, j) = v[off++];
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace

std::vector<RepMorphism> hom_basis(const Quiver& q, const Representation& m, const Representation& n)
{
    check_pair(q, m, n);
    DeltaLayout l = delta_layout(q, m, n);
    FieldMatrix ker = kernel_basis(delta_matrix(q, m, n, l));
    std::vector<RepMorphism> basis;
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        RepMorphism f{m, n, {}};
        std::vector<Scalar> col = ker.col(k);
        for (std::size_t v = 0; v < q.vertex_count(); ++v) {
            FieldMatrix b(n.dims[v], m.dims[v], m.p);
            for (std::size_t r = 0; r < n.dims[v]; ++r)
                for (std::size_t c = 0; c < m.dims[v]; ++c) b(r, c) = col[l.vert_off[v] + r * m.dims[v] + c];
            f.blocks.push_back(std::move(b));
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

std::size_t hom_dim(const Quiver& q, const Representation& m, const Representation& n)
{
    check_pair(q, m, n);
    DeltaLayout l = delta_layout(q, m, n);
    return l.unknowns - rank(delta_matrix(q, m, n, l));
}

HomCoordinates::HomCoordinates(const std::vector<RepMorphism>& basis, std::size_t flat_size, Scalar p)
    : dim_(basis.size())
{
    FieldMatrix b(flat_size, basis.size(), p);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        auto v = flatten(basis[k].blocks);
        for (std::size_t i = 0; i < flat_size; ++i) b(i, k) = v[i];
    }
    left_inv_ = left_inverse(b);
}

std::vector<Scalar> HomCoordinates::operator()(const RepMorphism& f) const
{
    if (dim_ == 0) return {};
    return left_inv_.apply(flatten(f.blocks));
}

ExtSpace::ExtSpace(const Quiver& q, const Representation& m, const Representation& n) : q_(q), m_(m), n_(n)
{
    check_pair(q, m, n);
    DeltaLayout l = delta_layout(q, m, n);
    offset_ = l.arrow_off;
    size_ = l.equations;
    RrefResult rr = rref_decompose(delta_matrix(q, m, n, l).transpose());
    for (std::size_t r = 0; r < rr.rank; ++r) image_rows_.push_back(rr.rref.row(r));
    image_pivots_ = rr.pivots;
    std::vector<bool> piv(size_, false);
    for (auto c : rr.pivots) piv[c] = true;
    for (std::size_t c = 0; c < size_; ++c)
        if (!piv[c]) free_.push_back(c);
}

std::vector<Scalar> ExtSpace::flat(const Cocycle& xi) const
{
    if (xi.size() != q_.arrows.size()) throw RepError("InvalidCocycle", "cocycle has the wrong number of arrows");
    std::vector<Scalar> v = flatten(xi);
    if (v.size() != size_) throw RepError("InvalidCocycle", "cocycle has the wrong shape");
    return v;
}

Cocycle ExtSpace::unflat(const std::vector<Scalar>& v) const
{
    std::vector<std::size_t> rows, cols;
    for (const auto& a : q_.arrows) {
        rows.push_back(n_.dims[a.target]);
        cols.push_back(m_.dims[a.source]);
    }
    return unflatten_blocks(v, rows, cols, m_.p);
}

std::vector<Scalar> ExtSpace::coordinates(const Cocycle& xi) const
{
    std::vector<Scalar> v = flat(xi);
    const Scalar p = m_.p;
    for (std::size_t r = 0; r < image_rows_.size(); ++r) {
        Scalar c = v[image_pivots_[r]];
        if (!c) continue;
        for (std::size_t j = 0; j < size_; ++j)
            if (image_rows_[r][j]) v[j] = sub_mod(v[j], mul_mod(c, image_rows_[r][j], p), p);
    }
    std::vector<Scalar> coords;
    for (auto f : free_) coords.push_back(v[f]);
    return coords;
}

Cocycle ExtSpace::cocycle(const std::vector<Scalar>& coords) const
{
    if (coords.size() != free_.size()) throw RepError("InvalidCocycle", "Ext coordinates have the wrong length");
    std::vector<Scalar> v(size_, 0);
    for (std::size_t k = 0; k < free_.size(); ++k) v[free_[k]] = coords[k] % m_.p;
    return unflat(v);
}

Cocycle ExtSpace::basis_cocycle(std::size_t k) const
{
    std::vector<Scalar> c(free_.size(), 0);
    c.at(k) = 1;
    return cocycle(c);
}

ExtSpace ext1(const AlgebraSpec& alg, const Representation& m, const Representation& n)
{
    if (alg.truncation) {
        std::size_t need = loewy_length(alg.quiver, m) + loewy_length(alg.quiver, n);
        if (need > *alg.truncation)
            throw RepError("TruncationTooSmall", "truncation " + std::to_string(*alg.truncation) +
                                                     " is too small; required bound is " + std::to_string(need));
    }
    return ExtSpace(alg.quiver, m, n);
}

std::size_t ext1_dim(const Quiver& q, const Representation& m, const Representation& n)
{
    check_pair(q, m, n);
    DeltaLayout l = delta_layout(q, m, n);
    return l.equations - rank(delta_matrix(q, m, n, l));
}

ShortExact middle_term(const Quiver& q, const Representation& m, const Representation& n, const Cocycle& xi)
{
    const Scalar p = m.p;
    ShortExact s;
    s.middle.p = p;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) s.middle.dims.push_back(n.dims[v] + m.dims[v]);
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& ar = q.arrows[a];
        FieldMatrix e(s.middle.dims[ar.target], s.middle.dims[ar.source], p);
        e.set_block(0, 0, n.mats[a]);
        e.set_block(0, n.dims[ar.source], xi[a]);
        e.set_block(n.dims[ar.target], n.dims[ar.source], m.mats[a]);
        s.middle.mats.push_back(std::move(e));
    }
    s.inclusion = RepMorphism{n, s.middle, {}};
    s.projection = RepMorphism{s.middle, m, {}};
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        FieldMatrix inc(s.middle.dims[v], n.dims[v], p);
        inc.set_block(0, 0, FieldMatrix::identity(n.dims[v], p));
        FieldMatrix pr(m.dims[v], s.middle.dims[v], p);
        pr.set_block(0, n.dims[v], FieldMatrix::identity(m.dims[v], p));
        s.inclusion.blocks.push_back(std::move(inc));
        s.projection.blocks.push_back(std::move(pr));
    }
    return s;
}

ShortExact middle_term(const Quiver& q, const ExtSpace& space, const std::vector<Scalar>& coords)
{
    return middle_term(q, space.source(), space.target(), space.cocycle(coords));
}

Cocycle pushforward(const Quiver& q, const RepMorphism& g, const Cocycle& xi)
{
    Cocycle out;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) out.push_back(g.blocks[q.arrows[a].target] * xi[a]);
    return out;
}

Cocycle pullback(const Quiver& q, const Cocycle& xi, const RepMorphism& f)
{
    Cocycle out;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) out.push_back(xi[a] * f.blocks[q.arrows[a].source]);
    return out;
}

Representation subrepresentation(const Quiver& q, const Representation& m, const std::vector<FieldMatrix>& columns)
{
    Representation s;
    s.p = m.p;
    for (const auto& c : columns) s.dims.push_back(c.cols());
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& ar = q.arrows[a];
        FieldMatrix img = m.mats[a] * columns[ar.source];
        s.mats.push_back(left_inverse(columns[ar.target]) * img);
    }
    return s;
}

Representation quotient_representation(const Quiver& q, const Representation& m, const std::vector<FieldMatrix>& proj)
{
    Representation s;
    s.p = m.p;
    for (const auto& c : proj) s.dims.push_back(c.rows());
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& ar = q.arrows[a];
        s.mats.push_back(proj[ar.target] * m.mats[a] * right_inverse(proj[ar.source]));
    }
    return s;
}

Factorization factor_morphism(const Quiver& q, const RepMorphism& f)
{
    std::vector<FieldMatrix> ker, img, cok;
    for (const auto& b : f.blocks) {
        ker.push_back(kernel_basis(b));
        img.push_back(column_space_basis(b));
        cok.push_back(cokernel_projection(b));
    }
    Factorization r;
    r.kernel = subrepresentation(q, f.source, ker);
    r.kernel_inclusion = RepMorphism{r.kernel, f.source, ker};
    r.image = subrepresentation(q, f.target, img);
    r.image_inclusion = RepMorphism{r.image, f.target, img};
    r.cokernel = quotient_representation(q, f.target, cok);
    r.cokernel_projection = RepMorphism{f.target, r.cokernel, cok};
    for (std::size_t v = 0; v < f.blocks.size(); ++v)
        if (r.kernel.dims[v] + r.image.dims[v] != f.source.dims[v])
            throw RepError("InternalError", "factor_morphism: rank-nullity violated");
    return r;
}

EndRadical end_radical(const Quiver& q, const Representation& m)
{
    EndRadical er;
    er.end_basis = hom_basis(q, m, m);
    const std::size_t d = er.end_basis.size();
    const Scalar p = m.p;
    std::vector<FieldMatrix> tot;
    for (const auto& e : er.end_basis) tot.push_back(total_matrix(e));
    FieldMatrix gram(d, d, p);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) gram(i, j) = gram(j, i) = trace(tot[i] * tot[j]);
    FieldMatrix rad = kernel_basis(gram);
    for (std::size_t k = 0; k < rad.cols(); ++k) er.radical_basis.push_back(combine(er.end_basis, rad.col(k), m, m));
    er.nilpotency_certified = true;
    const std::size_t n = m.total_dim();
    for (const auto& r : er.radical_basis)
        if (!power(total_matrix(r), n).is_zero()) er.nilpotency_certified = false;
    return er;
}

namespace {

std::vector<Scalar> random_coeffs(std::size_t n, Scalar p, std::mt19937_64& rng)
{
    std::uniform_int_distribution<Scalar> dist(1, p - 1);
    std::vector<Scalar> c(n);
    for (auto& x : c) x = dist(rng);
    return c;
}

bool is_local(const Quiver& q, const Representation& m, const std::vector<RepMorphism>& end_basis)
{
    if (end_basis.size() == 1) return true;
    (void)q;
    const std::size_t d = end_basis.size();
    std::vector<FieldMatrix> tot;
    for (const auto& e : end_basis) tot.push_back(total_matrix(e));
    FieldMatrix gram(d, d, m.p);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) gram(i, j) = gram(j, i) = trace(tot[i] * tot[j]);
    return rank(gram) == 1;
}

}  // namespace

bool is_indecomposable(const Quiver& q, const Representation& m)
{
    if (m.is_zero()) return false;
    return is_local(q, m, hom_basis(q, m, m));
}

bool is_brick(const Quiver& q, const Representation& m)
{
    return !m.is_zero() && hom_dim(q, m, m) == 1;
}

std::vector<Representation> decompose_flat(const Quiver& q, const Representation& m, std::mt19937_64& rng)
{
    if (m.is_zero()) return {};
    auto end = hom_basis(q, m, m);
    if (is_local(q, m, end)) return {m};
    const std::size_t n = m.total_dim();
    for (int attempt = 0; attempt < 64; ++attempt) {
        RepMorphism phi = combine(end, random_coeffs(end.size(), m.p, rng), m, m);
        for (Scalar lambda : eigenvalues(total_matrix(phi), rng)) {
            std::vector<FieldMatrix> kers, imgs;
            std::size_t kdim = 0;
            for (std::size_t v = 0; v < q.vertex_count(); ++v) {
                FieldMatrix psi = phi.blocks[v] - FieldMatrix::identity(m.dims[v], m.p).scaled(lambda);
                FieldMatrix pw = power(psi, n);
                kers.push_back(kernel_basis(pw));
                imgs.push_back(column_space_basis(pw));
                kdim += kers.back().cols();
            }
            if (kdim == 0 || kdim == n) continue;
            auto a = decompose_flat(q, subrepresentation(q, m, kers), rng);
            auto b = decompose_flat(q, subrepresentation(q, m, imgs), rng);
            a.insert(a.end(), b.begin(), b.end());
            return a;
        }
    }
    throw RepError("DecompositionFailed", "could not split a representation with non-local endomorphism ring");
}

bool is_isomorphic(const Quiver& q, const Representation& a, const Representation& b, std::mt19937_64& rng)
{
    if (a.dims != b.dims) return false;
    if (a.is_zero()) return true;
    auto h = hom_basis(q, a, b);
    if (h.empty()) return false;
    for (const auto& f : h)
        if (is_isomorphism(f)) return true;
    for (int t = 0; t < 3; ++t)
        if (is_isomorphism(combine(h, random_coeffs(h.size(), a.p, rng), a, b))) return true;
    return false;
}

std::vector<Summand> decompose(const Quiver& q, const Representation& m, std::mt19937_64& rng)
{
    std::vector<Summand> out;
    for (auto& piece : decompose_flat(q, m, rng)) {
        bool found = false;
        for (auto& s : out)
            if (is_isomorphic(q, s.rep, piece, rng)) {
                ++s.multiplicity;
                found = true;
                break;
            }
        if (!found) out.push_back({piece, 1});
    }
    return out;
}

std::size_t loewy_length(const Quiver& q, const Representation& m)
{
    std::vector<FieldMatrix> layer;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) layer.push_back(FieldMatrix::identity(m.dims[v], m.p));
    std::size_t len = 0;
    const std::size_t n = m.total_dim();
    while (true) {
        std::size_t tot = 0;
        for (const auto& l : layer) tot += l.cols();
        if (tot == 0) return len;
        if (len > n) return std::numeric_limits<std::size_t>::max();
        ++len;
        std::vector<FieldMatrix> next;
        for (std::size_t v = 0; v < q.vertex_count(); ++v) next.emplace_back(m.dims[v], 0, m.p);
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            const auto& ar = q.arrows[a];
            next[ar.target] = FieldMatrix::hstack(next[ar.target], m.mats[a] * layer[ar.source]);
        }
        for (auto& nx : next) nx = column_space_basis(nx);
        layer = std::move(next);
    }
}

bool is_nilpotent(const Quiver& q, const Representation& m)
{
    return loewy_length(q, m) != std::numeric_limits<std::size_t>::max();
}

std::size_t cyclic_length(const Quiver& q, const Representation& m)
{
    auto cyc = q.cyclic_vertices();
    std::size_t s = 0;
    for (std::size_t v = 0; v < cyc.size(); ++v)
        if (cyc[v]) s += m.dims[v];
    return s;
}

ClosureResult extension_closure(const AlgebraSpec& alg, const std::vector<Representation>& gens, std::size_t cap,
                                std::mt19937_64& rng)
{
    const Quiver& q = alg.quiver;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!is_brick(q, gens[i]))
            throw RepError("NonSemibrick", "generator " + std::to_string(i) + " is not a brick with End = F_p");
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (i != j && hom_dim(q, gens[i], gens[j]) != 0)
                throw RepError("NonSemibrick",
                               "generators " + std::to_string(i) + " and " + std::to_string(j) + " are not Hom-orthogonal");
    }
    ClosureResult res;
    auto known = [&](const Representation& r) {
        return std::any_of(res.members.begin(), res.members.end(),
                           [&](const Representation& x) { return is_isomorphic(q, x, r, rng); });
    };
    for (const auto& g : gens)
        if (!known(g)) res.members.push_back(g);
    std::set<std::pair<std::size_t, std::size_t>> done;
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t n = res.members.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (!done.insert({i, j}).second) continue;
                const Representation m = res.members[i];
                const Representation nn = res.members[j];
                if (m.total_dim() + nn.total_dim() > cap) {
                    if (ext1_dim(q, m, nn) > 0) res.capped = true;
                    continue;
                }
                ExtSpace e = ext1(alg, m, nn);
                if (e.dim() == 0) continue;
                std::vector<std::vector<Scalar>> classes;
                for (std::size_t k = 0; k < e.dim(); ++k) {
                    std::vector<Scalar> c(e.dim(), 0);
                    c[k] = 1;
                    classes.push_back(c);
                }
                if (e.dim() > 1) {
                    classes.emplace_back(e.dim(), 1);
                    classes.push_back(random_coeffs(e.dim(), m.p, rng));
                }
                for (const auto& c : classes) {
                    ShortExact s = middle_term(q, e, c);
                    for (auto& piece : decompose_flat(q, s.middle, rng)) {
                        if (known(piece)) continue;
                        res.members.push_back(piece);
                        grew = true;
                    }
                }
            }
        }
    }
    std::stable_sort(res.members.begin(), res.members.end(),
                     [](const Representation& a, const Representation& b) { return a.total_dim() < b.total_dim(); });
    return res;
}

Representation uniserial(const Quiver& q, std::size_t top, const std::vector<std::size_t>& path, Scalar p)
{
    std::vector<std::size_t> vert{top};
    for (auto a : path) {
        if (q.arrows.at(a).source != vert.back()) throw RepError("InvalidPath", "uniserial path is not composable");
        vert.push_back(q.arrows[a].target);
    }
    Representation r = Representation::zero(q, p);
    std::vector<std::size_t> local;
    for (auto v : vert) local.push_back(r.dims[v]++);
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        r.mats[a] = FieldMatrix(r.dims[q.arrows[a].target], r.dims[q.arrows[a].source], p);
    for (std::size_t k = 0; k < path.size(); ++k) r.mats[path[k]](local[k + 1], local[k]) = 1;
    return r;
}

Representation projective(const Quiver& q, std::size_t v, Scalar p)
{
    if (q.has_oriented_cycle()) throw RepError("InfiniteProjective", "projectives need an acyclic quiver");
    // Paths from v, each recorded by its end vertex; arrow extension table.
    std::vector<std::size_t> end{v};
    std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> ext;  // (arrow, (from, to))
    for (std::size_t k = 0; k < end.size(); ++k)
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].source == end[k]) {
                end.push_back(q.arrows[a].target);
                ext.push_back({a, {k, end.size() - 1}});
            }
    Representation r = Representation::zero(q, p);
    std::vector<std::size_t> local;
    for (auto e : end) local.push_back(r.dims[e]++);
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        r.mats[a] = FieldMatrix(r.dims[q.arrows[a].target], r.dims[q.arrows[a].source], p);
    for (const auto& [a, ft] : ext) r.mats[a](local[ft.second], local[ft.first]) = 1;
    return r;
}

}  // namespace smm

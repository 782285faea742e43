#include "smm/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace smm {

Scalar pow_mod(Scalar a, std::uint64_t e, Scalar p)
{
    Scalar r = 1 % p;
    Scalar b = a % p;
    while (e) {
        if (e & 1) r = mul_mod(r, b, p);
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    return r;
}

Scalar inv_mod(Scalar a, Scalar p)
{
    if (a % p == 0) throw LinalgError("division by zero in F_p");
    return pow_mod(a, p - 2, p);
}

Scalar reduce_mod(long long v, Scalar p)
{
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<Scalar>(r);
}

bool is_prime(Scalar p)
{
    if (p < 2) return false;
    for (Scalar d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_zero_vector(const std::vector<Scalar>& v)
{
    return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, Scalar p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0)
{
}

FieldMatrix FieldMatrix::identity(std::size_t n, Scalar p)
{
    FieldMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FieldMatrix FieldMatrix::from_rows(const std::vector<std::vector<long long>>& rows, Scalar p)
{
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    FieldMatrix m(rows.size(), c, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw LinalgError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = reduce_mod(rows[i][j], p);
    }
    return m;
}

FieldMatrix FieldMatrix::column(const std::vector<Scalar>& v, Scalar p)
{
    FieldMatrix m(v.size(), 1, p);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i] % p;
    return m;
}

void FieldMatrix::check_same_modulus(const FieldMatrix& o) const
{
    if (p_ != o.p_) throw LinalgError("mixed moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const
{
    check_same_modulus(o);
    if (cols_ != o.rows_) throw LinalgError("dimension mismatch in product");
    FieldMatrix r(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            Scalar x = (*this)(i, k);
            if (!x) continue;
            const Scalar* orow = &o.a_[k * o.cols_];
            Scalar* rrow = &r.a_[i * o.cols_];
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (orow[j]) rrow[j] = add_mod(rrow[j], mul_mod(x, orow[j], p_), p_);
        }
    }
    return r;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const
{
    check_same_modulus(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw LinalgError("dimension mismatch in sum");
    FieldMatrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = add_mod(a_[i], o.a_[i], p_);
    return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const
{
    check_same_modulus(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw LinalgError("dimension mismatch in difference");
    FieldMatrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = sub_mod(a_[i], o.a_[i], p_);
    return r;
}

FieldMatrix FieldMatrix::scaled(Scalar c) const
{
    FieldMatrix r(*this);
    for (auto& x : r.a_) x = mul_mod(x, c % p_, p_);
    return r;
}

FieldMatrix FieldMatrix::transpose() const
{
    FieldMatrix r(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

std::vector<Scalar> FieldMatrix::apply(const std::vector<Scalar>& v) const
{
    if (v.size() != cols_) throw LinalgError("dimension mismatch in apply");
    std::vector<Scalar> r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar s = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (v[j]) s = add_mod(s, mul_mod((*this)(i, j), v[j], p_), p_);
        r[i] = s;
    }
    return r;
}

std::vector<Scalar> FieldMatrix::col(std::size_t j) const
{
    std::vector<Scalar> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
    return r;
}

std::vector<Scalar> FieldMatrix::row(std::size_t i) const
{
    return std::vector<Scalar>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

bool FieldMatrix::is_zero() const { return is_zero_vector(a_); }

FieldMatrix FieldMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_) throw LinalgError("block out of range");
    FieldMatrix b(nr, nc, p_);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void FieldMatrix::set_block(std::size_t r0, std::size_t c0, const FieldMatrix& b)
{
    check_same_modulus(b);
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw LinalgError("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

void FieldMatrix::add_block(std::size_t r0, std::size_t c0, const FieldMatrix& b)
{
    check_same_modulus(b);
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw LinalgError("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            (*this)(r0 + i, c0 + j) = add_mod((*this)(r0 + i, c0 + j), b(i, j), p_);
}

FieldMatrix FieldMatrix::select_columns(const std::vector<std::size_t>& idx) const
{
    FieldMatrix r(rows_, idx.size(), p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(i, idx[j]);
    return r;
}

FieldMatrix FieldMatrix::select_rows(const std::vector<std::size_t>& idx) const
{
    FieldMatrix r(idx.size(), cols_, p_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(idx[i], j);
    return r;
}

FieldMatrix FieldMatrix::hstack(const FieldMatrix& a, const FieldMatrix& b)
{
    a.check_same_modulus(b);
    if (a.rows_ != b.rows_) throw LinalgError("hstack row mismatch");
    FieldMatrix r(a.rows_, a.cols_ + b.cols_, a.p_);
    r.set_block(0, 0, a);
    r.set_block(0, a.cols_, b);
    return r;
}

FieldMatrix FieldMatrix::vstack(const FieldMatrix& a, const FieldMatrix& b)
{
    a.check_same_modulus(b);
    if (a.cols_ != b.cols_) throw LinalgError("vstack column mismatch");
    FieldMatrix r(a.rows_ + b.rows_, a.cols_, a.p_);
    r.set_block(0, 0, a);
    r.set_block(a.rows_, 0, b);
    return r;
}

FieldMatrix FieldMatrix::direct_sum(const FieldMatrix& a, const FieldMatrix& b)
{
    a.check_same_modulus(b);
    FieldMatrix r(a.rows_ + b.rows_, a.cols_ + b.cols_, a.p_);
    r.set_block(0, 0, a);
    r.set_block(a.rows_, a.cols_, b);
    return r;
}

std::string FieldMatrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

RrefResult rref_decompose(const FieldMatrix& m)
{
    RrefResult res;
    res.rref = m;
    FieldMatrix& a = res.rref;
    const Scalar p = m.modulus();
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
        Scalar inv = inv_mod(a(r, c), p);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = mul_mod(a(r, j), inv, p);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Scalar f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (a(r, j)) a(i, j) = sub_mod(a(i, j), mul_mod(f, a(r, j), p), p);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const FieldMatrix& a) { return rref_decompose(a).rank; }

FieldMatrix kernel_basis(const FieldMatrix& a)
{
    const Scalar p = a.modulus();
    RrefResult rr = rref_decompose(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FieldMatrix k(a.cols(), free_cols.size(), p);
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        k(free_cols[f], f) = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            k(rr.pivots[i], f) = neg_mod(rr.rref(i, free_cols[f]), p);
    }
    return k;
}

FieldMatrix cokernel_projection(const FieldMatrix& a)
{
    return kernel_basis(a.transpose()).transpose();
}

KernelCokernel kernel_cokernel(const FieldMatrix& a)
{
    return {kernel_basis(a), cokernel_projection(a)};
}

LinearSolution solve_linear(const FieldMatrix& a, const std::vector<Scalar>& b)
{
    if (b.size() != a.rows())
        throw LinalgError("dimension mismatch: A has " + std::to_string(a.rows()) + " rows, b has " +
                          std::to_string(b.size()) + " entries");
    const Scalar p = a.modulus();
    LinearSolution sol;
    sol.kernel = kernel_basis(a);
    FieldMatrix aug = FieldMatrix::hstack(a, FieldMatrix::column(b, p));
    RrefResult rr = rref_decompose(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return sol;
    std::vector<Scalar> x(a.cols(), 0);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.rref(i, a.cols());
#ifndef NDEBUG
    if (a.apply(x) != b) throw LinalgError("solve_linear self-check failed");
#endif
    sol.particular = std::move(x);
    return sol;
}

FieldMatrix column_space_basis(const FieldMatrix& a)
{
    return a.select_columns(rref_decompose(a).pivots);
}

std::optional<FieldMatrix> inverse(const FieldMatrix& a)
{
    if (a.rows() != a.cols()) return std::nullopt;
    std::size_t n = a.rows();
    RrefResult rr = rref_decompose(FieldMatrix::hstack(a, FieldMatrix::identity(n, a.modulus())));
    if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
    return rr.rref.block(0, n, n, n);
}

bool is_invertible(const FieldMatrix& a)
{
    return a.rows() == a.cols() && rank(a) == a.rows();
}

FieldMatrix left_inverse(const FieldMatrix& a)
{
    // Pick rows of A forming an invertible square block.
    RrefResult rr = rref_decompose(a.transpose());
    if (rr.rank != a.cols()) throw LinalgError("left_inverse: matrix lacks full column rank");
    FieldMatrix sq = a.select_rows(rr.pivots);
    FieldMatrix inv = *inverse(sq);
    FieldMatrix l(a.cols(), a.rows(), a.modulus());
    for (std::size_t j = 0; j < rr.pivots.size(); ++j)
        for (std::size_t i = 0; i < a.cols(); ++i) l(i, rr.pivots[j]) = inv(i, j);
    return l;
}

FieldMatrix right_inverse(const FieldMatrix& a)
{
    return left_inverse(a.transpose()).transpose();
}

FieldMatrix power(const FieldMatrix& a, std::size_t e)
{
    FieldMatrix r = FieldMatrix::identity(a.rows(), a.modulus());
    FieldMatrix b = a;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Scalar trace(const FieldMatrix& a)
{
    Scalar t = 0;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t = add_mod(t, a(i, i), a.modulus());
    return t;
}

namespace {

using Poly = std::vector<Scalar>;

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, Scalar p)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
    trim(r);
    return r;
}

// Returns (quotient, remainder).
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, Scalar p)
{
    trim(a);
    if (b.empty()) throw LinalgError("polynomial division by zero");
    Poly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    Scalar lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        Scalar c = mul_mod(a.back(), lead_inv, p);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub_mod(a[shift + i], mul_mod(c, b[i], p), p);
        trim(a);
    }
    trim(q);
    return {q, a};
}

Poly poly_monic(Poly f, Scalar p)
{
    trim(f);
    if (f.empty()) return f;
    Scalar inv = inv_mod(f.back(), p);
    for (auto& c : f) c = mul_mod(c, inv, p);
    return f;
}

Poly poly_gcd(Poly a, Poly b, Scalar p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, Scalar p)
{
    Poly r{1};
    base = poly_divmod(base, mod, p).second;
    while (e) {
        if (e & 1) r = poly_divmod(poly_mul(r, base, p), mod, p).second;
        e >>= 1;
        if (e) base = poly_divmod(poly_mul(base, base, p), mod, p).second;
    }
    return r;
}

Scalar poly_eval(const Poly& f, Scalar x, Scalar p)
{
    Scalar r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = add_mod(mul_mod(r, x, p), f[i], p);
    return r;
}

void split_linear_factors(const Poly& g, Scalar p, std::mt19937_64& rng, std::vector<Scalar>& out)
{
    std::size_t deg = g.size() - 1;
    if (deg == 0) return;
    if (deg == 1) {
        out.push_back(neg_mod(mul_mod(g[0], inv_mod(g[1], p), p), p));
        return;
    }
    std::uniform_int_distribution<Scalar> dist(0, p - 1);
    for (;;) {
        Scalar delta = dist(rng);
        Poly h = poly_powmod(Poly{delta, 1}, (p - 1) / 2, g, p);
        if (h.empty()) h = Poly{0};
        h[0] = sub_mod(h[0], 1, p);
        trim(h);
        Poly d = poly_gcd(g, h, p);
        if (d.size() > 1 && d.size() < g.size()) {
            split_linear_factors(d, p, rng, out);
            split_linear_factors(poly_monic(poly_divmod(g, d, p).first, p), p, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Scalar> characteristic_polynomial(const FieldMatrix& m)
{
    if (m.rows() != m.cols()) throw LinalgError("characteristic polynomial of a non-square matrix");
    const Scalar p = m.modulus();
    const std::size_t n = m.rows();
    FieldMatrix h = m;
    // Similarity reduction to upper Hessenberg form.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && h(piv, j) == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
        }
        Scalar inv = inv_mod(h(j + 1, j), p);
        for (std::size_t k = j + 2; k < n; ++k) {
            if (h(k, j) == 0) continue;
            Scalar u = mul_mod(h(k, j), inv, p);
            for (std::size_t c = 0; c < n; ++c) h(k, c) = sub_mod(h(k, c), mul_mod(u, h(j + 1, c), p), p);
            for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = add_mod(h(r, j + 1), mul_mod(u, h(r, k), p), p);
        }
    }
    std::vector<Poly> pm(n + 1);
    pm[0] = Poly{1};
    for (std::size_t k = 1; k <= n; ++k) {
        Poly cur = poly_mul(Poly{neg_mod(h(k - 1, k - 1), p), 1}, pm[k - 1], p);
        Scalar t = 1;
        for (std::size_t i = k - 1; i-- > 0;) {
            t = mul_mod(t, h(i + 1, i), p);
            Scalar c = mul_mod(t, h(i, k - 1), p);
            if (c == 0) continue;
            const Poly& prev = pm[i];
            if (cur.size() < prev.size()) cur.resize(prev.size(), 0);
            for (std::size_t d = 0; d < prev.size(); ++d) cur[d] = sub_mod(cur[d], mul_mod(c, prev[d], p), p);
        }
        cur.resize(k + 1, 0);
        pm[k] = cur;
    }
    Poly res = pm[n];
    res.resize(n + 1, 0);
    return res;
}

std::vector<Scalar> polynomial_roots(const std::vector<Scalar>& f0, Scalar p, std::mt19937_64& rng)
{
    Poly f = poly_monic(f0, p);
    std::vector<Scalar> roots;
    if (f.size() <= 1) return roots;
    if (p < 1000) {
        for (Scalar x = 0; x < p; ++x)
            if (poly_eval(f, x, p) == 0) roots.push_back(x);
        return roots;
    }
    Poly xp = poly_powmod(Poly{0, 1}, p, f, p);
    if (xp.size() < 2) xp.resize(2, 0);
    xp[1] = sub_mod(xp[1], 1, p);
    trim(xp);
    Poly g = xp.empty() ? f : poly_gcd(f, xp, p);
    if (g.size() > 1) split_linear_factors(g, p, rng, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Scalar> eigenvalues(const FieldMatrix& a, std::mt19937_64& rng)
{
    return polynomial_roots(characteristic_polynomial(a), a.modulus(), rng);
}

VectorSpan::VectorSpan(std::size_t n, Scalar p) : n_(n), p_(p) {}

std::vector<Scalar> VectorSpan::reduce(std::vector<Scalar> v) const
{
    if (v.size() != n_) throw LinalgError("VectorSpan: wrong vector length");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar c = v[pivot_[r]];
        if (!c) continue;
        const auto& row = rows_[r];
        for (std::size_t j = 0; j < n_; ++j)
            if (row[j]) v[j] = sub_mod(v[j], mul_mod(c, row[j], p_), p_);
    }
    return v;
}

bool VectorSpan::contains(const std::vector<Scalar>& v) const { return is_zero_vector(reduce(v)); }

bool VectorSpan::insert(const std::vector<Scalar>& v0)
{
    if (v0.size() != n_) throw LinalgError("VectorSpan: wrong vector length");
    std::size_t k = rows_.size();
    // Reduce while tracking the combination in terms of independent inserted vectors.
    std::vector<Scalar> v = v0;
    std::vector<Scalar> combo(k + 1, 0);
    combo[k] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar c = v[pivot_[r]];
        if (!c) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (rows_[r][j]) v[j] = sub_mod(v[j], mul_mod(c, rows_[r][j], p_), p_);
        for (std::size_t j = 0; j < combo_[r].size(); ++j)
            if (combo_[r][j]) combo[j] = sub_mod(combo[j], mul_mod(c, combo_[r][j], p_), p_);
    }
    std::size_t piv = 0;
    while (piv < n_ && v[piv] == 0) ++piv;
    if (piv == n_) return false;
    Scalar inv = inv_mod(v[piv], p_);
    for (auto& x : v) x = mul_mod(x, inv, p_);
    for (auto& x : combo) x = mul_mod(x, inv, p_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar c = rows_[r][piv];
        if (!c) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (v[j]) rows_[r][j] = sub_mod(rows_[r][j], mul_mod(c, v[j], p_), p_);
        combo_[r].resize(k + 1, 0);
        for (std::size_t j = 0; j <= k; ++j)
            if (combo[j]) combo_[r][j] = sub_mod(combo_[r][j], mul_mod(c, combo[j], p_), p_);
    }
    rows_.push_back(std::move(v));
    pivot_.push_back(piv);
    combo_.push_back(std::move(combo));
    return true;
}

std::optional<std::vector<Scalar>> VectorSpan::coordinates(const std::vector<Scalar>& v) const
{
    if (!contains(v)) return std::nullopt;
    std::vector<Scalar> c(rows_.size(), 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar x = v[pivot_[r]];
        if (!x) continue;
        for (std::size_t j = 0; j < combo_[r].size(); ++j)
            if (combo_[r][j]) c[j] = add_mod(c[j], mul_mod(x, combo_[r][j], p_), p_);
    }
    return c;
}

}  // namespace smm

#pragma once

// Independent reference computations used to derive expected values.

#include <cstdint>
#include <functional>
#include <vector>

#include "smm/rep.hpp"

namespace oracle {

// Counts morphisms M -> N by enumerating every family of vertex matrices over a tiny field.
inline std::uint64_t brute_hom_count(const smm::Quiver& q, const smm::Representation& m, const smm::Representation& n)
{
    const smm::Scalar p = m.p;
    std::vector<std::size_t> off;
    std::size_t total = 0;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        off.push_back(total);
        total += n.dims[v] * m.dims[v];
    }
    std::vector<smm::Scalar> x(total, 0);
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (std::size_t a = 0; a < q.arrows.size() && ok; ++a) {
            std::size_t i = q.arrows[a].source, j = q.arrows[a].target;
            for (std::size_t r = 0; r < n.dims[j] && ok; ++r)
                for (std::size_t c = 0; c < m.dims[i] && ok; ++c) {
                    std::uint64_t lhs = 0, rhs = 0;
                    for (std::size_t k = 0; k < m.dims[j]; ++k)
                        lhs += std::uint64_t(x[off[j] + r * m.dims[j] + k]) * m.mats[a](k, c);
                    for (std::size_t k = 0; k < n.dims[i]; ++k)
                        rhs += std::uint64_t(n.mats[a](r, k)) * x[off[i] + k * m.dims[i] + c];
                    ok = (lhs % p) == (rhs % p);
                }
        }
        if (ok) ++count;
        std::size_t k = 0;
        while (k < total && ++x[k] == p) x[k++] = 0;
        if (k == total) break;
    }
    return count;
}

inline long long euler_form(const smm::Quiver& q, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
    long long s = 0;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) s += (long long)a[v] * (long long)b[v];
    for (const auto& ar : q.arrows) s -= (long long)a[ar.source] * (long long)b[ar.target];
    return s;
}

// Plain Gaussian elimination over Z/p, written independently of the library.
inline std::vector<std::vector<long long>> rref_ref(std::vector<std::vector<long long>> a, long long p)
{
    auto inv = [p](long long x) {
        long long r = 1, e = p - 2;
        x %= p;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t row = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t piv = row;
        while (piv < rows && ((a[piv][c] % p) + p) % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        long long s = inv(((a[row][c] % p) + p) % p);
        for (auto& x : a[row]) x = ((x % p + p) % p) * s % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row) continue;
            long long f = ((a[r][c] % p) + p) % p;
            for (std::size_t k = 0; k < cols; ++k) a[r][k] = (((a[r][k] - f * a[row][k]) % p) + p) % p;
        }
        ++row;
    }
    for (auto& r : a)
        for (auto& x : r) x = ((x % p) + p) % p;
    return a;
}

}  // namespace oracle

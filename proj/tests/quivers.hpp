#pragma once

#include "smm/rep.hpp"

namespace fixtures {

inline smm::Quiver linear_a(std::size_t n)
{
    smm::Quiver q;
    for (std::size_t i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
    for (std::size_t i = 0; i + 1 < n; ++i) q.arrows.push_back({i, i + 1, "a" + std::to_string(i + 1)});
    return q;
}

// Loop l at 1 and b: 1 -> 2.
inline smm::Quiver loop_quiver()
{
    return smm::Quiver{{"1", "2"}, {{0, 0, "l"}, {0, 1, "b"}}};
}

// Cyclic rank-3 quiver with arrows i -> i-1.
inline smm::Quiver cyclic3()
{
    return smm::Quiver{{"1", "2", "3"}, {{1, 0, "a2"}, {0, 2, "a1"}, {2, 1, "a3"}}};
}

// Uniserial on the cyclic quiver, top at vertex index t, given length.
inline smm::Representation tube_uniserial(std::size_t t, std::size_t len, smm::Scalar p = smm::kDefaultModulus)
{
    auto q = cyclic3();
    std::vector<std::size_t> path;
    std::size_t v = t;
    for (std::size_t k = 1; k < len; ++k) {
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].source == v) {
                path.push_back(a);
                v = q.arrows[a].target;
                break;
            }
    }
    return smm::uniserial(q, t, path, p);
}

inline smm::Representation x_n(std::size_t n, smm::Scalar p = smm::kDefaultModulus)
{
    return smm::uniserial(loop_quiver(), 0, std::vector<std::size_t>(n - 1, 0), p);
}

inline smm::Representation m_n(std::size_t n, smm::Scalar p = smm::kDefaultModulus)
{
    std::vector<std::size_t> path(n - 1, 0);
    path.push_back(1);
    return smm::uniserial(loop_quiver(), 0, path, p);
}

// Interval module with support [i, j] (0-based vertex indices) over linear A_n.
inline smm::Representation interval(std::size_t n, std::size_t i, std::size_t j, smm::Scalar p = smm::kDefaultModulus)
{
    std::vector<std::size_t> path;
    for (std::size_t k = i; k < j; ++k) path.push_back(k);
    return smm::uniserial(linear_a(n), i, path, p);
}

}  // namespace fixtures

/**
 * Test-only oracles, kept independent of the library code paths they check.
 */

#ifndef SPECGEO_TESTS_ORACLES_HPP
#define SPECGEO_TESTS_ORACLES_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <vector>

#include "specgeo/complex.hpp"

namespace oracles {

/**
 * Incidence sign via the permutation-signature route: the sign of the
 * permutation sorting [missing vertex, y...] times the sign of x (sorted,
 * hence +1).  Zero unless y is a codimension-1 face of x.
 */
inline int incidence_sign_by_signature(const specgeo::Simplex& x,
                                       const specgeo::Simplex& y) {
    if (x.size() != y.size() + 1) return 0;
    if (!specgeo::is_face_of(y, x)) return 0;
    int missing = -1;
    for (int v : x)
        if (!std::binary_search(y.begin(), y.end(), v)) missing = v;
    std::vector<int> arranged;
    arranged.push_back(missing);
    arranged.insert(arranged.end(), y.begin(), y.end());
    int inversions = 0;
    for (std::size_t i = 0; i < arranged.size(); ++i)
        for (std::size_t j = i + 1; j < arranged.size(); ++j)
            if (arranged[i] > arranged[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

/**
 * Barycentric refinement by brute force: every subset of the simplex list
 * that is totally ordered by containment.  Exponential; for |c| <= 20.
 */
inline specgeo::Complex refine_bruteforce(const specgeo::Complex& c) {
    const auto& ss = c.simplices();
    const std::size_t n = ss.size();
    std::vector<specgeo::Simplex> chains;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<int> members;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t(1) << i)) members.push_back(static_cast<int>(i));
        bool ordered = true;
        for (std::size_t a = 0; a < members.size() && ordered; ++a)
            for (std::size_t b = a + 1; b < members.size() && ordered; ++b) {
                const auto& sa = ss[members[a]];
                const auto& sb = ss[members[b]];
                if (!specgeo::is_face_of(sa, sb) && !specgeo::is_face_of(sb, sa))
                    ordered = false;
            }
        if (ordered) chains.push_back(members);
    }
    return specgeo::Complex(std::move(chains));
}

/** Kirchhoff eigenvalues of the cycle C_n: 2 - 2 cos(2 pi k / n), sorted. */
inline std::vector<double> cycle_kirchhoff_eigenvalues(int n) {
    std::vector<double> vals(n);
    for (int k = 0; k < n; ++k) vals[k] = 2.0 - 2.0 * std::cos(2.0 * M_PI * k / n);
    std::sort(vals.begin(), vals.end());
    return vals;
}

/**
 * Exact rank of an integer matrix over the rationals, by fraction-free
 * (Bareiss) elimination in arbitrary precision.
 */
inline int exact_integer_rank(const Eigen::MatrixXd& m_in) {
    using boost::multiprecision::cpp_int;
    const int rows = static_cast<int>(m_in.rows());
    const int cols = static_cast<int>(m_in.cols());
    std::vector<std::vector<cpp_int>> m(rows, std::vector<cpp_int>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            double v = m_in(i, j);
            long long r = std::llround(v);
            if (std::abs(v - static_cast<double>(r)) > 1e-9)
                throw std::invalid_argument("exact_integer_rank: non-integer entry");
            m[i][j] = r;
        }
    int rank = 0;
    cpp_int prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

/** Nullity of an integer symmetric matrix, exactly. */
inline int exact_nullity(const Eigen::MatrixXd& m) {
    return static_cast<int>(m.rows()) - exact_integer_rank(m);
}

/**
 * Contractibility by the bare definition: exhaustive recursion over all
 * vertices, no memoization or ordering tricks.  Tiny graphs only.
 */
inline bool contractible_bruteforce(const specgeo::Graph& g) {
    if (g.vertex_count() == 0) return false;
    if (g.vertex_count() == 1) return true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        specgeo::Graph sphere = g.induced(g.neighbors(v));
        if (!contractible_bruteforce(sphere)) continue;
        if (contractible_bruteforce(g.without_vertex(v))) return true;
    }
    return false;
}

/** Relabel vertex ids to 1..n preserving order (for comparisons up to labels). */
inline specgeo::Complex compact_relabel(const specgeo::Complex& c) {
    std::vector<int> verts = c.vertices();
    std::vector<specgeo::Simplex> out;
    out.reserve(c.size());
    for (const auto& s : c.simplices()) {
        specgeo::Simplex t;
        t.reserve(s.size());
        for (int id : s) {
            auto it = std::lower_bound(verts.begin(), verts.end(), id);
            t.push_back(static_cast<int>(it - verts.begin()) + 1);
        }
        out.push_back(std::move(t));
    }
    return specgeo::Complex(std::move(out));
}

/** True iff g is a connected 2-regular graph on n vertices, i.e. the cycle C_n. */
inline bool is_cycle_graph(const specgeo::Graph& g, int n) {
    if (g.vertex_count() != n || static_cast<int>(g.edge_count()) != n) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return reached == n;
}

/** The eight octahedron facets exactly as listed in the reference object. */
inline std::vector<specgeo::Simplex> octahedron_facets() {
    return {{1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6},
            {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}};
}

}  // namespace oracles

#endif

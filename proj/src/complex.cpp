#include "specgeo/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace specgeo {

bool is_valid_simplex(const Simplex& s) {
    if (s.empty()) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0) return false;
        if (i > 0 && s[i] <= s[i - 1]) return false;
    }
    return true;
}

bool simplex_less(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

bool is_face_of(const Simplex& face, const Simplex& s) {
    return std::includes(s.begin(), s.end(), face.begin(), face.end());
}

/** ------------------------------------------------------------------- //
 *                                 GRAPH                                 //
 *  ------------------------------------------------------------------- */

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("Graph: vertex id out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("Graph: bad vertex id");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::adjacent(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("Graph: bad vertex id");
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::induced(std::vector<int> vertices) const {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> pos(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= n_) throw std::invalid_argument("Graph: bad vertex id");
        pos[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> sub;
    for (const auto& [u, v] : edges_)
        if (pos[u] >= 0 && pos[v] >= 0) sub.emplace_back(pos[u], pos[v]);
    return Graph(static_cast<int>(vertices.size()), std::move(sub));
}

Graph Graph::without_vertex(int v) const {
    std::vector<int> keep;
    keep.reserve(n_ > 0 ? n_ - 1 : 0);
    for (int u = 0; u < n_; ++u)
        if (u != v) keep.push_back(u);
    return induced(std::move(keep));
}

/** ------------------------------------------------------------------- //
 *                                COMPLEX                                //
 *  ------------------------------------------------------------------- */

void Complex::canonicalize_and_validate(bool check_closure) {
    for (const auto& s : simplices_)
        if (!is_valid_simplex(s))
            throw std::invalid_argument(
                "Complex: simplices must be non-empty, strictly increasing, non-negative");
    std::sort(simplices_.begin(), simplices_.end(), simplex_less);
    auto dup = std::adjacent_find(simplices_.begin(), simplices_.end());
    if (dup != simplices_.end())
        throw std::invalid_argument("Complex: duplicate simplex");

    dim_ = simplices_.empty() ? -1 : static_cast<int>(simplices_.back().size()) - 1;

    if (!check_closure) return;
    // Codimension-1 faces suffice: closure under those implies full closure.
    for (const auto& s : simplices_) {
        if (s.size() == 1) continue;
        Simplex face(s.size() - 1);
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            face.clear();
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) face.push_back(s[i]);
            if (!contains(face))
                throw std::invalid_argument("Complex: not closed under taking faces");
        }
    }
}

Complex::Complex(std::vector<Simplex> simplices) : simplices_(std::move(simplices)) {
    canonicalize_and_validate(true);
}

Complex Complex::closure_of(const std::vector<Simplex>& facets) {
    std::set<Simplex> out;
    for (const Simplex& raw : facets) {
        Simplex f = raw;
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (!is_valid_simplex(f))
            throw std::invalid_argument("closure_of: facets must be non-empty id sets");
        const std::size_t m = f.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
            Simplex sub;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (std::uint64_t(1) << i)) sub.push_back(f[i]);
            out.insert(std::move(sub));
        }
    }
    Complex c;
    c.simplices_.assign(out.begin(), out.end());
    c.canonicalize_and_validate(false);  // closed by construction
    return c;
}

bool Complex::contains(const Simplex& s) const {
    return std::binary_search(simplices_.begin(), simplices_.end(), s, simplex_less);
}

std::size_t Complex::index_of(const Simplex& s) const {
    auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s, simplex_less);
    if (it == simplices_.end() || *it != s)
        throw std::invalid_argument("Complex: simplex not in complex");
    return static_cast<std::size_t>(it - simplices_.begin());
}

std::vector<int> Complex::vertices() const {
    std::vector<int> out;
    for (const auto& s : simplices_) {
        if (s.size() > 1) break;  // canonical order: vertices come first
        out.push_back(s[0]);
    }
    return out;
}

FVector Complex::f_vector() const {
    FVector f(dim_ + 1, 0);
    for (const auto& s : simplices_) f[s.size() - 1]++;
    return f;
}

std::int64_t Complex::euler_characteristic() const {
    std::int64_t chi = 0;
    for (const auto& s : simplices_) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

/** ------------------------------------------------------------------- //
 *                              OPERATIONS                               //
 *  ------------------------------------------------------------------- */

namespace {

// Bron-Kerbosch with pivoting; cliques reported through `sink`.
void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p,
                   std::vector<int> x, std::vector<Simplex>& sink) {
    if (p.empty() && x.empty()) {
        sink.push_back(r);
        return;
    }
    // Pivot: vertex of P cup X with most neighbours in P.
    int pivot = -1, best = -1;
    for (const auto& pool : {p, x})
        for (int u : pool) {
            int cnt = 0;
            for (int w : p)
                if (g.adjacent(u, w)) ++cnt;
            if (cnt > best) best = cnt, pivot = u;
        }
    std::vector<int> candidates;
    for (int u : p)
        if (pivot < 0 || !g.adjacent(pivot, u)) candidates.push_back(u);
    for (int u : candidates) {
        std::vector<int> p2, x2;
        for (int w : p)
            if (g.adjacent(u, w)) p2.push_back(w);
        for (int w : x)
            if (g.adjacent(u, w)) x2.push_back(w);
        r.push_back(u);
        bron_kerbosch(g, r, std::move(p2), std::move(x2), sink);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), u));
        x.push_back(u);
    }
}

}  // namespace

Complex whitney_complex(const Graph& g) {
    if (g.vertex_count() == 0) return Complex();
    std::vector<int> all(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
    std::vector<Simplex> maximal;
    std::vector<int> r;
    bron_kerbosch(g, r, all, {}, maximal);
    for (auto& c : maximal) std::sort(c.begin(), c.end());
    return Complex::closure_of(maximal);
}

Complex join(const Complex& a, const Complex& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    int max_a = 0;
    for (const auto& s : a.simplices())
        max_a = std::max(max_a, s.back());
    const int off = max_a + 1;

    std::vector<Simplex> out = a.simplices();
    std::vector<Simplex> b_shift;
    b_shift.reserve(b.size());
    for (const auto& s : b.simplices()) {
        Simplex t = s;
        for (int& id : t) id += off;
        b_shift.push_back(t);
        out.push_back(std::move(t));
    }
    for (const auto& x : a.simplices())
        for (const auto& y : b_shift) {
            Simplex u = x;
            u.insert(u.end(), y.begin(), y.end());  // ids of y all exceed ids of x
            out.push_back(std::move(u));
        }
    return Complex(std::move(out));
}

namespace {

// Indices j > i with simplex(i) strictly contained in simplex(j).  Canonical
// order puts lower dimensions first, so containment always points forward.
std::vector<std::vector<int>> containment_lists(const Complex& c) {
    const auto& ss = c.simplices();
    const int n = static_cast<int>(ss.size());
    std::vector<std::vector<int>> ups(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (ss[j].size() <= ss[i].size()) continue;
            if (is_face_of(ss[i], ss[j])) ups[i].push_back(j);
        }
    return ups;
}

void extend_chains(const std::vector<std::vector<int>>& ups, Simplex& chain,
                   std::vector<Simplex>& sink) {
    sink.push_back(chain);
    for (int j : ups[chain.back()]) {
        chain.push_back(j);
        extend_chains(ups, chain, sink);
        chain.pop_back();
    }
}

}  // namespace

Graph complex_to_graph(const Complex& c) {
    const auto& ss = c.simplices();
    const int n = static_cast<int>(ss.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (ss[j].size() <= ss[i].size()) continue;
            if (is_face_of(ss[i], ss[j])) edges.emplace_back(i, j);
        }
    return Graph(n, std::move(edges));
}

Graph skeleton_graph(const Complex& c) {
    std::vector<int> verts = c.vertices();
    std::vector<int> pos;
    int max_id = verts.empty() ? -1 : verts.back();
    pos.assign(max_id + 1, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (const auto& s : c.simplices())
        if (s.size() == 2) edges.emplace_back(pos[s[0]], pos[s[1]]);
    return Graph(static_cast<int>(verts.size()), std::move(edges));
}

Complex barycentric_refine(const Complex& c) {
    if (c.empty()) return Complex();
    auto ups = containment_lists(c);
    std::vector<Simplex> chains;
    Simplex chain;
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        chain.assign(1, i);
        extend_chains(ups, chain, chains);
    }
    return Complex(std::move(chains));
}

std::vector<std::vector<std::int64_t>> stirling_refinement_matrix(int q) {
    if (q < 0) throw std::invalid_argument("stirling_refinement_matrix: q must be >= 0");
    const int m = q + 2;  // Stirling table up to n = q+1
    std::vector<std::vector<std::int64_t>> stirling(m, std::vector<std::int64_t>(m, 0));
    stirling[0][0] = 1;
    for (int n = 1; n < m; ++n)
        for (int k = 1; k <= n; ++k)
            stirling[n][k] = k * stirling[n - 1][k] + stirling[n - 1][k - 1];

    std::vector<std::vector<std::int64_t>> a(q + 1, std::vector<std::int64_t>(q + 1, 0));
    std::int64_t factorial = 1;
    for (int r = 0; r <= q; ++r) {
        factorial *= (r + 1);
        for (int c = r; c <= q; ++c) a[r][c] = stirling[c + 1][r + 1] * factorial;
    }
    return a;
}

FVector apply_refinement_matrix(const std::vector<std::vector<std::int64_t>>& a,
                                const FVector& f) {
    if (a.empty() || a.size() != a[0].size())
        throw std::invalid_argument("apply_refinement_matrix: square matrix required");
    if (f.size() > a.size())
        throw std::invalid_argument("apply_refinement_matrix: f-vector too long");
    FVector out(f.size(), 0);
    for (std::size_t r = 0; r < f.size(); ++r)
        for (std::size_t c = 0; c < f.size(); ++c) out[r] += a[r][c] * f[c];
    return out;
}

bool is_flag_complex(const Complex& c) {
    if (c.empty()) return true;
    Complex w = whitney_complex(skeleton_graph(c));
    if (w.size() != c.size()) return false;
    // Map compacted skeleton ids back to original vertex ids and compare.
    std::vector<int> verts = c.vertices();
    std::vector<Simplex> mapped;
    mapped.reserve(w.size());
    for (const auto& s : w.simplices()) {
        Simplex t;
        t.reserve(s.size());
        for (int id : s) t.push_back(verts[id]);
        mapped.push_back(std::move(t));
    }
    std::sort(mapped.begin(), mapped.end(), simplex_less);
    return mapped == c.simplices();
}

std::uint64_t complex_hash(const Complex& c) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    for (const auto& s : c.simplices()) {
        mix(s.size());
        for (int id : s) mix(static_cast<std::uint64_t>(id) + 0x9e3779b97f4a7c15ull);
    }
    return h;
}

}  // namespace specgeo

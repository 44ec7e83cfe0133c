#include "specgeo/topology.hpp"

#include <algorithm>
#include <map>

namespace specgeo {

/** ------------------------------------------------------------------- //
 *                        STARS, CORES, SPHERES                          //
 *  ------------------------------------------------------------------- */

std::vector<Simplex> star(const Complex& c, const Simplex& x) {
    if (!c.contains(x)) throw std::invalid_argument("star: simplex not in complex");
    std::vector<Simplex> out;
    for (const auto& y : c.simplices())
        if (is_face_of(x, y)) out.push_back(y);
    return out;
}

std::vector<Simplex> core(const Complex& c, const Simplex& x) {
    if (!c.contains(x)) throw std::invalid_argument("core: simplex not in complex");
    std::vector<Simplex> out;
    const std::size_t m = x.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
        Simplex sub;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::uint64_t(1) << i)) sub.push_back(x[i]);
        out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end(), simplex_less);
    return out;
}

Complex order_complex(const Complex& host, std::vector<Simplex> members) {
    std::sort(members.begin(), members.end(), simplex_less);
    for (const auto& s : members)
        if (!host.contains(s))
            throw std::invalid_argument("order_complex: member not in host");
    const int n = static_cast<int>(members.size());
    std::vector<std::vector<int>> ups(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (members[j].size() <= members[i].size()) continue;
            if (is_face_of(members[i], members[j])) ups[i].push_back(j);
        }
    std::vector<Simplex> chains;
    auto rec = [&](auto&& self, std::vector<int>& ch) -> void {
        chains.push_back(ch);
        for (int j : ups[ch.back()]) {
            ch.push_back(j);
            self(self, ch);
            ch.pop_back();
        }
    };
    for (int i = 0; i < n; ++i) {
        std::vector<int> ch{i};
        rec(rec, ch);
    }
    return Complex(std::move(chains));
}

SphereSplit sphere_split(const Complex& c, const Simplex& x) {
    SphereSplit out;
    for (const auto& y : core(c, x))
        if (y != x) out.stable_members.push_back(y);
    for (const auto& y : star(c, x))
        if (y != x) out.unstable_members.push_back(y);
    out.stable = order_complex(c, out.stable_members);
    out.unstable = order_complex(c, out.unstable_members);
    return out;
}

Graph graph_unit_sphere(const Graph& g, int v) { return g.induced(g.neighbors(v)); }

/** ------------------------------------------------------------------- //
 *                      RECURSIVE RECOGNITION                            //
 *  ------------------------------------------------------------------- */

std::vector<int> wl_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    int classes = -1;
    for (int round = 0; round < n + 1; ++round) {
        // signature: own color plus sorted neighbor colors
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            for (int w : g.neighbors(v)) sig[v].push_back(color[w]);
            std::sort(sig[v].begin() + 1, sig[v].end());
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& s : sig) rank.emplace(s, 0);
        int next = 0;
        for (auto& [k, r] : rank) r = next++;
        for (int v = 0; v < n; ++v) color[v] = rank[sig[v]];
        if (next == classes) break;
        classes = next;
    }
    return color;
}

std::string graph_invariant_key(const Graph& g, const std::vector<int>& colors) {
    std::string key;
    auto put = [&key](std::uint32_t x) {
        for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((x >> (8 * b)) & 0xff));
    };
    put(static_cast<std::uint32_t>(g.vertex_count()));
    put(static_cast<std::uint32_t>(g.edge_count()));
    std::vector<int> sorted_colors = colors;
    std::sort(sorted_colors.begin(), sorted_colors.end());
    for (int c : sorted_colors) put(static_cast<std::uint32_t>(c));
    std::vector<std::pair<int, int>> edge_colors;
    for (const auto& [u, v] : g.edges()) {
        int a = colors[u], b = colors[v];
        edge_colors.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edge_colors.begin(), edge_colors.end());
    for (const auto& [a, b] : edge_colors) {
        put(static_cast<std::uint32_t>(a));
        put(static_cast<std::uint32_t>(b));
    }
    return key;
}

void HomotopyRecognizer::tick() {
    if (++nodes_ > node_budget_) throw BudgetExhausted(node_budget_);
}

bool HomotopyRecognizer::isomorphic(const Graph& a, const std::vector<int>& ca,
                                    const Graph& b, const std::vector<int>& cb) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;

    // Vertices of b per color, and a color-guided order for a: rare classes first.
    std::map<int, std::vector<int>> b_by_color;
    for (int v = 0; v < n; ++v) b_by_color[cb[v]].push_back(v);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        auto iu = b_by_color.find(ca[u]);
        auto iv = b_by_color.find(ca[v]);
        std::size_t su = iu == b_by_color.end() ? 0 : iu->second.size();
        std::size_t sv = iv == b_by_color.end() ? 0 : iv->second.size();
        if (su != sv) return su < sv;
        return u < v;
    });

    std::vector<int> image(n, -1), used(n, 0);
    auto rec = [&](auto&& self, int depth) -> bool {
        tick();
        if (depth == n) return true;
        int u = order[depth];
        auto it = b_by_color.find(ca[u]);
        if (it == b_by_color.end()) return false;
        for (int w : it->second) {
            if (used[w]) continue;
            bool fits = true;
            for (int d = 0; d < depth && fits; ++d) {
                int p = order[d];
                if (a.adjacent(u, p) != b.adjacent(w, image[p])) fits = false;
            }
            if (!fits) continue;
            image[u] = w;
            used[w] = 1;
            if (self(self, depth + 1)) return true;
            used[w] = 0;
            image[u] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

const HomotopyRecognizer::CacheEntry* HomotopyRecognizer::find(
    const std::unordered_map<std::string, std::vector<CacheEntry>>& cache,
    const std::string& key, const Graph& g, const std::vector<int>& colors, int param) {
    auto it = cache.find(key);
    if (it == cache.end()) return nullptr;
    for (const CacheEntry& e : it->second) {
        if (e.param != param) continue;
        if (isomorphic(g, colors, e.graph, e.colors)) return &e;
    }
    return nullptr;
}

bool HomotopyRecognizer::contractible_rec(const Graph& g) {
    tick();
    const int n = g.vertex_count();
    if (n == 0) return false;
    if (n == 1) return true;

    std::vector<int> colors = wl_colors(g);
    std::string key = graph_invariant_key(g, colors);
    if (const CacheEntry* e = find(contractible_cache_, key, g, colors, 0))
        return e->verdict;

    // Low-degree vertices first: their unit spheres are cheap to decide.
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&g](int u, int v) { return g.degree(u) < g.degree(v); });

    bool verdict = false;
    for (int v : order) {
        if (g.degree(v) == 0) continue;  // empty sphere is never contractible
        if (!contractible_rec(graph_unit_sphere(g, v))) continue;
        if (contractible_rec(g.without_vertex(v))) {
            verdict = true;
            break;
        }
    }
    contractible_cache_[key].push_back(CacheEntry{g, std::move(colors), 0, verdict});
    return verdict;
}

bool HomotopyRecognizer::sphere_rec(const Graph& g, int d) {
    tick();
    if (d < -1) throw std::invalid_argument("sphere: dimension must be >= -1");
    if (d == -1) return g.vertex_count() == 0;
    if (g.vertex_count() == 0) return false;

    std::vector<int> colors = wl_colors(g);
    std::string key = graph_invariant_key(g, colors);
    if (const CacheEntry* e = find(sphere_cache_, key, g, colors, d)) return e->verdict;

    bool verdict = manifold_rec(g, d);
    if (verdict) {
        verdict = false;
        for (int v = 0; v < g.vertex_count() && !verdict; ++v)
            verdict = contractible_rec(g.without_vertex(v));
    }
    sphere_cache_[key].push_back(CacheEntry{g, std::move(colors), d, verdict});
    return verdict;
}

bool HomotopyRecognizer::manifold_rec(const Graph& g, int m) {
    if (m < 0) throw std::invalid_argument("manifold: dimension must be >= 0");
    for (int v = 0; v < g.vertex_count(); ++v) {
        tick();
        if (!sphere_rec(graph_unit_sphere(g, v), m - 1)) return false;
    }
    return true;
}

bool HomotopyRecognizer::contractible(const Graph& g) {
    nodes_ = 0;
    return contractible_rec(g);
}

bool HomotopyRecognizer::sphere(const Graph& g, int d) {
    nodes_ = 0;
    return sphere_rec(g, d);
}

bool HomotopyRecognizer::manifold(const Graph& g, int m) {
    nodes_ = 0;
    return manifold_rec(g, m);
}

HomotopyRecognizer& default_recognizer() {
    thread_local HomotopyRecognizer instance;
    return instance;
}

bool is_contractible(const Graph& g) { return default_recognizer().contractible(g); }
bool is_sphere(const Graph& g, int d) { return default_recognizer().sphere(g, d); }
bool is_manifold(const Graph& g, int m) { return default_recognizer().manifold(g, m); }

bool complex_is_manifold(const Complex& c, int m) {
    if (c.empty()) return true;
    Graph g = is_flag_complex(c) ? skeleton_graph(c) : complex_to_graph(c);
    return is_manifold(g, m);
}

/** ------------------------------------------------------------------- //
 *                            GAUSS-BONNET                               //
 *  ------------------------------------------------------------------- */

Rational curvature(const Graph& g, int v) {
    Complex sphere = whitney_complex(graph_unit_sphere(g, v));
    FVector f = sphere.f_vector();
    Rational k(1);  // the f_{-1} = 1 term
    long long sign = -1;
    for (std::size_t i = 0; i < f.size(); ++i) {
        k += Rational(sign * f[i], static_cast<long long>(i) + 2);
        sign = -sign;
    }
    return k;
}

GaussBonnetResult gauss_bonnet(const Graph& g) {
    Rational sum(0);
    for (int v = 0; v < g.vertex_count(); ++v) sum += curvature(g, v);
    std::int64_t chi = whitney_complex(g).euler_characteristic();
    return GaussBonnetResult{sum, chi, sum == Rational(chi)};
}

}  // namespace specgeo

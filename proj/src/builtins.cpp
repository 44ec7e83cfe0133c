#include "specgeo/builtins.hpp"

#include <stdexcept>

#include "specgeo/rng.hpp"

namespace specgeo {

Complex octahedron() { return cross_polytope(2); }

Complex cross_polytope(int d) {
    if (d < 0) throw std::invalid_argument("cross_polytope: dimension must be >= 0");
    // Antipodal pairs (1,2), (3,4), ...; facets pick one vertex per pair.
    const int pairs = d + 1;
    std::vector<Simplex> facets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
        Simplex f;
        for (int p = 0; p < pairs; ++p)
            f.push_back(2 * p + 1 + static_cast<int>((mask >> p) & 1));
        facets.push_back(std::move(f));
    }
    return Complex::closure_of(facets);
}

Complex icosahedron() {
    static const int faces[20][3] = {
        {1, 2, 3},   {1, 3, 4},   {1, 4, 5},  {1, 5, 6},  {1, 6, 2},
        {2, 3, 7},   {3, 4, 8},   {4, 5, 9},  {5, 6, 10}, {6, 2, 11},
        {3, 7, 8},   {4, 8, 9},   {5, 9, 10}, {6, 10, 11}, {2, 11, 7},
        {7, 8, 12},  {8, 9, 12},  {9, 10, 12}, {10, 11, 12}, {11, 7, 12}};
    std::vector<Simplex> facets;
    for (const auto& f : faces) facets.push_back({f[0], f[1], f[2]});
    return Complex::closure_of(facets);
}

Complex cycle_complex(int n) {
    if (n < 3) throw std::invalid_argument("cycle_complex: need n >= 3");
    std::vector<Simplex> facets;
    for (int i = 1; i < n; ++i) facets.push_back({i, i + 1});
    facets.push_back({1, n});
    return Complex::closure_of(facets);
}

Complex complete_complex(int n) {
    if (n < 1) throw std::invalid_argument("complete_complex: need n >= 1");
    Simplex all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    return Complex::closure_of({all});
}

Graph random_graph(int n, int m, std::uint64_t seed) {
    std::vector<std::pair<int, int>> pool;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pool.emplace_back(i, j);
    if (m < 0 || m > static_cast<int>(pool.size()))
        throw std::invalid_argument("random_graph: bad edge count");
    std::mt19937_64 rng(seed);
    // Partial Fisher-Yates: the first m entries become the sample.
    for (int i = 0; i < m; ++i) {
        std::size_t j = i + uniform_below(rng, pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(m);
    return Graph(n, std::move(pool));
}

Complex builtin_complex(const std::string& spec) {
    std::string name = spec;
    long param = -1;
    if (auto pos = spec.find(':'); pos != std::string::npos) {
        name = spec.substr(0, pos);
        try {
            param = std::stol(spec.substr(pos + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("builtin_complex: bad parameter in '" + spec + "'");
        }
    }
    auto need_param = [&](const char* what) {
        if (param < 0)
            throw std::invalid_argument(std::string("builtin_complex: '") + what +
                                        "' needs a parameter, e.g. " + what + ":4");
        return static_cast<int>(param);
    };
    if (name == "octahedron") return octahedron();
    if (name == "icosahedron") return icosahedron();
    if (name == "cross-polytope") return cross_polytope(need_param("cross-polytope"));
    if (name == "cycle") return cycle_complex(need_param("cycle"));
    if (name == "complete") return complete_complex(need_param("complete"));
    if (name == "point") return Complex(std::vector<Simplex>{{1}});
    if (name == "edge") return Complex::closure_of({{1, 2}});
    throw std::invalid_argument("builtin_complex: unknown builtin '" + name + "'");
}

}  // namespace specgeo

#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "specgeo/builtins.hpp"
#include "specgeo/topology.hpp"

using namespace specgeo;

namespace {

Graph octahedron_graph() { return skeleton_graph(octahedron()); }

Graph cycle_graph(int n) { return skeleton_graph(cycle_complex(n)); }

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

}  // namespace

TEST_SUITE("topology") {

TEST_CASE("star") {
    Complex oct = octahedron();
    CHECK(star(oct, {1, 3, 5}) == std::vector<Simplex>{{1, 3, 5}});
    CHECK(star(oct, {1}).size() == 9);  // itself + 4 edges + 4 triangles

    Complex edge = Complex({{1}, {2}, {1, 2}});
    CHECK(star(edge, {1}) == std::vector<Simplex>{{1}, {1, 2}});

    CHECK_THROWS_AS(star(oct, {7}), std::invalid_argument);
}

TEST_CASE("core") {
    Complex oct = octahedron();
    CHECK(core(oct, {1, 3, 5}).size() == 7);
    CHECK(core(oct, {1}) == std::vector<Simplex>{{1}});
    CHECK(core(oct, {1, 3}).size() == 3);
    CHECK_THROWS_AS(core(oct, {1, 2}), std::invalid_argument);  // antipodal: not an edge
}

TEST_CASE("sphere split") {
    Complex oct = octahedron();

    SphereSplit top = sphere_split(oct, {1, 3, 5});
    CHECK(top.unstable_members.empty());
    CHECK(top.stable.f_vector() == FVector{6, 6});  // boundary of a triangle, refined

    SphereSplit bottom = sphere_split(oct, {1});
    CHECK(bottom.stable_members.empty());
    CHECK(bottom.unstable_members.size() == 8);

    SphereSplit edge = sphere_split(oct, {1, 3});
    CHECK(edge.stable_members == std::vector<Simplex>{{1}, {3}});
    CHECK(edge.unstable_members == std::vector<Simplex>{{1, 3, 5}, {1, 3, 6}});
    CHECK(edge.stable.f_vector() == FVector{2});
    CHECK(edge.unstable.f_vector() == FVector{2});
}

TEST_CASE("unit sphere of a simplex is the join of the dual spheres") {
    for (const Complex& c : {octahedron(), complete_complex(4),
                             join(cycle_complex(4), cycle_complex(4))}) {
        Graph refined = complex_to_graph(c);
        for (const auto& x : c.simplices()) {
            SphereSplit split = sphere_split(c, x);
            std::vector<Simplex> all = split.stable_members;
            all.insert(all.end(), split.unstable_members.begin(),
                       split.unstable_members.end());
            Complex joined = join(split.stable, split.unstable);
            CHECK(joined == order_complex(c, all));
            int v = static_cast<int>(c.index_of(x));
            CHECK(joined == whitney_complex(graph_unit_sphere(refined, v)));
        }
    }
}

TEST_CASE("graph unit spheres") {
    Graph oct = octahedron_graph();
    for (int v = 0; v < 6; ++v)
        CHECK(oracles::is_cycle_graph(graph_unit_sphere(oct, v), 4));

    Graph k4 = complete_graph(4);
    CHECK(graph_unit_sphere(k4, 0) == complete_graph(3));

    Graph c5 = cycle_graph(5);
    CHECK(graph_unit_sphere(c5, 0).edge_count() == 0);
    CHECK(graph_unit_sphere(c5, 0).vertex_count() == 2);

    CHECK_THROWS_AS(graph_unit_sphere(c5, 9), std::invalid_argument);
}

TEST_CASE("contractibility") {
    CHECK(is_contractible(Graph(1, {})));
    CHECK_FALSE(is_contractible(Graph()));
    for (int n = 2; n <= 6; ++n) CHECK(is_contractible(complete_graph(n)));
    CHECK_FALSE(is_contractible(cycle_graph(4)));
    CHECK_FALSE(is_contractible(Graph(2, {})));
    CHECK(is_contractible(Graph(3, {{0, 1}, {1, 2}})));  // path
}

TEST_CASE("contractibility matches the exhaustive definition on small graphs") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        int n = 4 + static_cast<int>(seed % 3);
        int maxm = n * (n - 1) / 2;
        int m = static_cast<int>((seed * 5) % (maxm + 1));
        Graph g = random_graph(n, m, seed);
        CHECK(is_contractible(g) == oracles::contractible_bruteforce(g));
    }
}

TEST_CASE("sphere recognition") {
    CHECK(is_sphere(Graph(), -1));
    CHECK_FALSE(is_sphere(Graph(1, {}), -1));
    CHECK(is_sphere(Graph(2, {}), 0));
    CHECK_FALSE(is_sphere(Graph(3, {}), 0));
    for (int n = 4; n <= 9; ++n) CHECK(is_sphere(cycle_graph(n), 1));
    CHECK_FALSE(is_sphere(complete_graph(3), 1));
    CHECK(is_sphere(octahedron_graph(), 2));
    CHECK(is_sphere(skeleton_graph(icosahedron()), 2));
    CHECK_FALSE(is_sphere(cycle_graph(4), 2));
}

TEST_CASE("manifold recognition") {
    CHECK(is_manifold(Graph(4, {}), 0));
    CHECK_FALSE(is_manifold(Graph(3, {{0, 1}}), 0));
    CHECK(is_manifold(skeleton_graph(join(cycle_complex(4), cycle_complex(4))), 3));
    CHECK_FALSE(is_manifold(complete_graph(3), 1));
    CHECK(is_manifold(cycle_graph(6), 1));
}

TEST_CASE("joins of spheres are spheres") {
    Complex s0 = Complex({{1}, {2}});
    struct Item {
        Complex c;
        int dim;
    };
    std::vector<Item> spheres{{s0, 0}, {cycle_complex(4), 1}, {cycle_complex(5), 1},
                              {octahedron(), 2}};
    for (const auto& a : spheres)
        for (const auto& b : spheres) {
            if (a.dim + b.dim + 1 > 4) continue;
            Graph g = skeleton_graph(join(a.c, b.c));
            CHECK(is_sphere(g, a.dim + b.dim + 1));
        }
}

TEST_CASE("refinement preserves manifolds") {
    struct Item {
        Complex c;
        int dim;
    };
    std::vector<Item> manifolds{{cycle_complex(5), 1},
                                {octahedron(), 2},
                                {join(cycle_complex(4), cycle_complex(4)), 3}};
    for (const auto& item : manifolds) {
        CHECK(is_manifold(skeleton_graph(item.c), item.dim));
        CHECK(is_manifold(complex_to_graph(item.c), item.dim));
    }
}

TEST_CASE("verified spheres satisfy the euler gem formula") {
    struct Item {
        Complex c;
        int dim;
    };
    std::vector<Item> spheres{{Complex({{1}, {2}}), 0},
                              {cycle_complex(7), 1},
                              {octahedron(), 2},
                              {icosahedron(), 2},
                              {join(cycle_complex(4), cycle_complex(5)), 3},
                              {cross_polytope(3), 3}};
    for (const auto& item : spheres) {
        REQUIRE(is_sphere(skeleton_graph(item.c), item.dim));
        CHECK(item.c.euler_characteristic() == 1 + (item.dim % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("curvature values") {
    Graph oct = octahedron_graph();
    for (int v = 0; v < 6; ++v) CHECK(curvature(oct, v) == Rational(1, 3));

    // Refining the octahedron produces flat degree-6 vertices at the old
    // triangle barycenters.
    Graph refined = complex_to_graph(octahedron());
    bool saw_flat = false;
    for (int v = 0; v < refined.vertex_count(); ++v)
        if (refined.degree(v) == 6) {
            CHECK(curvature(refined, v) == Rational(0));
            saw_flat = true;
        }
    CHECK(saw_flat);

    // Odd-dimensional manifolds are flat everywhere.
    Graph s3 = skeleton_graph(join(cycle_complex(4), cycle_complex(4)));
    for (int v = 0; v < s3.vertex_count(); ++v) CHECK(curvature(s3, v) == Rational(0));

    CHECK_THROWS_AS(curvature(oct, 17), std::invalid_argument);
}

TEST_CASE("gauss-bonnet") {
    auto oct = gauss_bonnet(octahedron_graph());
    CHECK(oct.curvature_sum == Rational(2));
    CHECK(oct.chi == 2);
    CHECK(oct.ok);

    auto s3 = gauss_bonnet(skeleton_graph(join(cycle_complex(4), cycle_complex(4))));
    CHECK(s3.curvature_sum == Rational(0));
    CHECK(s3.chi == 0);
    CHECK(s3.ok);

    auto k5 = gauss_bonnet(complete_graph(5));
    CHECK(k5.curvature_sum == Rational(1));
    CHECK(k5.chi == 1);
    CHECK(k5.ok);
}

TEST_CASE("gauss-bonnet holds on arbitrary graphs") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = random_graph(8, static_cast<int>(4 + (seed * 3) % 22), seed * 131);
        CHECK(gauss_bonnet(g).ok);
    }
}

TEST_CASE("search budget is enforced") {
    HomotopyRecognizer tiny(5);
    CHECK_THROWS_AS(tiny.contractible(complete_graph(6)), BudgetExhausted);
    HomotopyRecognizer roomy;
    CHECK(roomy.contractible(complete_graph(6)));
}

}  // TEST_SUITE

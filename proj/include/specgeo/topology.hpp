/**
 * Alexandrov topology on a complex (stars, cores, sphere splits) and the
 * recursive recognition of contractible graphs, spheres and manifolds,
 * plus discrete Gauss-Bonnet curvature in exact rational arithmetic.
 */

#ifndef SPECGEO_TOPOLOGY_HPP
#define SPECGEO_TOPOLOGY_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "specgeo/complex.hpp"

namespace specgeo {

using Rational = boost::rational<long long>;

/** ------------------------------------------------------------------- //
 *                        STARS, CORES, SPHERES                          //
 *  ------------------------------------------------------------------- */

/** Star U(x): all simplices y of c with x subset y, including x itself. */
std::vector<Simplex> star(const Complex& c, const Simplex& x);

/** Core C(x): all non-empty subsets of x (members of c by closure). */
std::vector<Simplex> core(const Complex& c, const Simplex& x);

/**
 * Complex of chains of the containment poset restricted to `members`
 * (which must belong to host).  Vertex i of the result is the i-th member
 * in canonical order.
 */
Complex order_complex(const Complex& host, std::vector<Simplex> members);

/**
 * The unit sphere of x in the Barycentric refinement splits as the join
 * of a stable part (proper faces of x) and an unstable part (proper
 * cofaces of x).  The complexes are the order complexes of the two sets.
 */
struct SphereSplit {
    std::vector<Simplex> stable_members;    // y in c, y proper subset of x
    std::vector<Simplex> unstable_members;  // y in c, x proper subset of y
    Complex stable;
    Complex unstable;
};

SphereSplit sphere_split(const Complex& c, const Simplex& x);

/** Induced subgraph on the neighbors of v. */
Graph graph_unit_sphere(const Graph& g, int v);

/** ------------------------------------------------------------------- //
 *                      RECURSIVE RECOGNITION                            //
 *  ------------------------------------------------------------------- */

/** Thrown when the recursive search exceeds its node budget. */
class BudgetExhausted : public std::runtime_error {
  public:
    explicit BudgetExhausted(std::size_t budget)
        : std::runtime_error("recognition search exceeded the node budget (" +
                             std::to_string(budget) + ")") {}
};

/**
 * Recognizes contractible graphs, d-spheres and m-manifolds by the
 * recursive definitions.  Results are memoized across calls in a cache
 * keyed by a degree-refined invariant; key collisions fall back to an
 * exact isomorphism check, so cache hits are always sound.
 *
 * The search is exponential in the worst case.  Every recursion or
 * isomorphism node consumes budget; when the budget of a public call is
 * exhausted, BudgetExhausted is thrown (the caller cannot distinguish
 * true from false at that point).
 */
class HomotopyRecognizer {
  public:
    explicit HomotopyRecognizer(std::size_t node_budget = 20'000'000)
        : node_budget_(node_budget) {}

    void set_budget(std::size_t nodes) { node_budget_ = nodes; }
    std::size_t budget() const { return node_budget_; }
    std::size_t nodes_used() const { return nodes_; }

    bool contractible(const Graph& g);
    bool sphere(const Graph& g, int d);
    bool manifold(const Graph& g, int m);

  private:
    struct CacheEntry {
        Graph graph;
        std::vector<int> colors;
        int param;  // sphere dimension; unused for contractibility
        bool verdict;
    };

    std::unordered_map<std::string, std::vector<CacheEntry>> contractible_cache_;
    std::unordered_map<std::string, std::vector<CacheEntry>> sphere_cache_;
    std::size_t node_budget_;
    std::size_t nodes_ = 0;

    void tick();
    bool contractible_rec(const Graph& g);
    bool sphere_rec(const Graph& g, int d);
    bool manifold_rec(const Graph& g, int m);
    bool isomorphic(const Graph& a, const std::vector<int>& ca, const Graph& b,
                    const std::vector<int>& cb);
    const CacheEntry* find(const std::unordered_map<std::string, std::vector<CacheEntry>>& cache,
                           const std::string& key, const Graph& g,
                           const std::vector<int>& colors, int param);
};

/** Thread-local recognizer shared by the free functions below. */
HomotopyRecognizer& default_recognizer();

/** True iff g is contractible in the recursive sense; K_1 yes, empty no. */
bool is_contractible(const Graph& g);

/** True iff g is a d-sphere; the empty graph is the (-1)-sphere. */
bool is_sphere(const Graph& g, int d);

/** True iff every unit sphere of g is an (m-1)-sphere. */
bool is_manifold(const Graph& g, int m);

/**
 * Manifold test for a complex, through the graph bridge: the 1-skeleton
 * when c is a flag complex, the containment graph otherwise.
 */
bool complex_is_manifold(const Complex& c, int m);

/** ------------------------------------------------------------------- //
 *                            GAUSS-BONNET                               //
 *  ------------------------------------------------------------------- */

/**
 * Curvature K(v) = sum_k (-1)^k f_{k-1}(S(v)) / (k+1) with f_{-1} = 1,
 * where S(v) carries its Whitney complex.  Exact rational arithmetic.
 */
Rational curvature(const Graph& g, int v);

struct GaussBonnetResult {
    Rational curvature_sum;
    std::int64_t chi;  // Euler characteristic of the Whitney complex
    bool ok;           // exact equality
};

GaussBonnetResult gauss_bonnet(const Graph& g);

/** Degree-refined WL colors (exposed for the recognizer and its tests). */
std::vector<int> wl_colors(const Graph& g);

/** Isomorphism-invariant cache key built from the WL coloring. */
std::string graph_invariant_key(const Graph& g, const std::vector<int>& colors);

}  // namespace specgeo

#endif

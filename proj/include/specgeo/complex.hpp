/**
 * Finite abstract simplicial complexes: construction, canonicalization,
 * Whitney (clique) complexes, joins, and Barycentric refinement.
 */

#ifndef SPECGEO_COMPLEX_HPP
#define SPECGEO_COMPLEX_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace specgeo {

/**
 * A simplex is a strictly increasing list of non-negative vertex ids.
 * Dimension = number of vertices - 1.
 */
using Simplex = std::vector<int>;

/** Simplex counts per dimension, f_0 .. f_q. */
using FVector = std::vector<std::int64_t>;

bool is_valid_simplex(const Simplex& s);

/** Canonical order: by dimension first, then lexicographic on vertex lists. */
bool simplex_less(const Simplex& a, const Simplex& b);

/** True iff `face` is a (not necessarily proper) subset of `s`; both sorted. */
bool is_face_of(const Simplex& face, const Simplex& s);

/** ------------------------------------------------------------------- //
 *                                 GRAPH                                 //
 *  ------------------------------------------------------------------- */

/**
 * Finite simple graph on vertices 0..n-1.  No self-loops, no multi-edges.
 * Edge list and adjacency lists are kept sorted so that all derived
 * constructions are deterministic.
 */
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool adjacent(int u, int v) const;

    /**
     * Induced subgraph on the given vertices (need not be sorted); vertex i
     * of the result corresponds to vertices[i] after sorting ascending.
     */
    Graph induced(std::vector<int> vertices) const;

    Graph without_vertex(int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/** ------------------------------------------------------------------- //
 *                                COMPLEX                                //
 *  ------------------------------------------------------------------- */

/**
 * Finite abstract simplicial complex: a set of simplices closed under
 * taking non-empty subsets, stored in canonical order (dimension, then
 * lexicographic).  Immutable after construction; all transforms return
 * new values.
 */
class Complex {
  public:
    /** The empty complex. */
    Complex() = default;

    /**
     * Build from an explicit simplex list.  Validates each simplex,
     * canonicalizes the order, and checks closure under taking faces;
     * throws std::invalid_argument on violation.
     */
    explicit Complex(std::vector<Simplex> simplices);

    /**
     * Downward closure of a facet list (the classical "generate":
     * all non-empty subsets of the given sets).  An empty facet is
     * an error; an empty facet list yields the empty complex.
     */
    static Complex closure_of(const std::vector<Simplex>& facets);

    const std::vector<Simplex>& simplices() const { return simplices_; }
    std::size_t size() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }

    /** Maximal simplex dimension; -1 for the empty complex. */
    int dim() const { return dim_; }

    bool contains(const Simplex& s) const;

    /** Canonical index of s; throws std::invalid_argument if absent. */
    std::size_t index_of(const Simplex& s) const;

    /** Sorted list of vertex ids appearing in the complex. */
    std::vector<int> vertices() const;

    FVector f_vector() const;
    std::int64_t euler_characteristic() const;

    bool operator==(const Complex& other) const {
        return simplices_ == other.simplices_;
    }

  private:
    std::vector<Simplex> simplices_;
    int dim_ = -1;

    void canonicalize_and_validate(bool check_closure);
};

/** ------------------------------------------------------------------- //
 *                              OPERATIONS                               //
 *  ------------------------------------------------------------------- */

/**
 * Whitney (clique) complex of a graph: the simplices are the vertex sets
 * of the complete subgraphs, of every size >= 1.  Uses maximal-clique
 * enumeration (Bron-Kerbosch with pivoting) followed by downward closure.
 */
Complex whitney_complex(const Graph& g);

/**
 * Join a * b: a, b, and all unions x cup y.  Vertex ids of b are shifted
 * by (max id of a) + 1 before the union, so inputs never collide.
 * dim(a*b) = dim(a) + dim(b) + 1.
 */
Complex join(const Complex& a, const Complex& b);

/**
 * Containment graph: one vertex per simplex (canonical index), an edge
 * whenever one simplex strictly contains the other.  The Whitney complex
 * of this graph is the Barycentric refinement of c.
 */
Graph complex_to_graph(const Complex& c);

/**
 * Graph on the 0-dimensional simplices of c, with an edge for every
 * 1-dimensional simplex.  Vertex i corresponds to the i-th vertex of
 * c in canonical (ascending id) order.
 */
Graph skeleton_graph(const Complex& c);

/**
 * Barycentric refinement: the complex of chains (totally ordered subsets)
 * of the containment poset of c.  Vertex ids of the result are canonical
 * indices of the simplices of c.  Equals whitney_complex(complex_to_graph(c)).
 */
Complex barycentric_refine(const Complex& c);

/**
 * The (q+1)x(q+1) matrix A with f(refine(G)) = A f(G) for every complex
 * of dimension <= q.  Row r, column c (0-based dimensions) holds
 * S(c+1, r+1) * (r+1)! where S are Stirling numbers of the second kind;
 * the diagonal is (k+1)!.  Throws std::invalid_argument for q < 0.
 */
std::vector<std::vector<std::int64_t>> stirling_refinement_matrix(int q);

/** A * f for the matrix layout produced by stirling_refinement_matrix. */
FVector apply_refinement_matrix(const std::vector<std::vector<std::int64_t>>& a,
                                const FVector& f);

/** True iff c equals the Whitney complex of its own 1-skeleton. */
bool is_flag_complex(const Complex& c);

/** FNV-1a hash of the canonical simplex list (used for host caching). */
std::uint64_t complex_hash(const Complex& c);

}  // namespace specgeo

#endif

/**
 * Named reference complexes so that every standard object is constructible
 * without input files.
 */

#ifndef SPECGEO_BUILTINS_HPP
#define SPECGEO_BUILTINS_HPP

#include <string>

#include "specgeo/complex.hpp"

namespace specgeo {

/** The octahedron 2-sphere on vertices 1..6 (antipodal pairs 12, 34, 56). */
Complex octahedron();

/** d-dimensional cross-polytope, a d-sphere on 2(d+1) vertices; d >= 0. */
Complex cross_polytope(int d);

/** Icosahedron surface, a 2-sphere with f = (12, 30, 20). */
Complex icosahedron();

/** Hollow n-cycle (1-dimensional), vertices 1..n; n >= 3. */
Complex cycle_complex(int n);

/** Full simplex on n vertices (the clique complex of K_n); n >= 1. */
Complex complete_complex(int n);

/** Erdos-Renyi G(n, m) graph, m edges chosen without replacement. */
Graph random_graph(int n, int m, std::uint64_t seed);

/**
 * Resolve a builtin spec string: "octahedron", "icosahedron",
 * "cross-polytope:d", "cycle:n", "complete:n", "point", "edge".
 * Throws std::invalid_argument on unknown names or bad parameters.
 */
Complex builtin_complex(const std::string& spec);

}  // namespace specgeo

#endif

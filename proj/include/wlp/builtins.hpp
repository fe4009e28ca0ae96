#ifndef WLP_BUILTINS_HPP
#define WLP_BUILTINS_HPP

#include <string>

#include "wlp/simplicial_complex.hpp"

namespace wlp {

/// The m-cycle <12, 23, ..., m1> as a 1-dimensional complex (m >= 3).
SimplicialComplex cycle_complex(int m);

/// Independence complex of the path on m vertices (m >= 1).
SimplicialComplex path_independence_complex(int m);

/// Boundary of the octahedron: 6 vertices, 12 edges, 8 triangles.
SimplicialComplex octahedron();

/// Boundary of the tetrahedron: 4 vertices, 6 edges, 4 triangles.
SimplicialComplex tetrahedron_boundary();

/// The 7-vertex triangulation of the torus: 21 edges, 14 triangles.
SimplicialComplex torus_7();

/// The complex <123, 134, 45> on 5 vertices.
SimplicialComplex example_2_1();

/// Looks up a named complex: cycle(m), path_independence(m), octahedron,
/// tetrahedron_boundary, torus_7, example_2_1. Throws std::invalid_argument
/// on an unknown name or malformed arity.
SimplicialComplex builtin(const std::string& name);

/// Names accepted by builtin(), for help text.
std::string builtin_names();

} // namespace wlp

#endif

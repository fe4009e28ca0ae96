#include <doctest.h>

#include <algorithm>
#include <set>

#include "wlp/builtins.hpp"
#include "wlp/random_complex.hpp"
#include "wlp/simplicial_complex.hpp"

using namespace wlp;

namespace {

FVector fv(std::vector<long> entries) { return FVector{std::move(entries)}; }

} // namespace

TEST_CASE("from_facets builds the facet antichain") {
    SimplicialComplex c = SimplicialComplex::from_facets(5, {{1, 2, 3}, {1, 3, 4}, {4, 5}});
    CHECK(c.facet_count() == 3);
    CHECK(c.dim() == 2);

    SimplicialComplex point = SimplicialComplex::from_facets(1, {{1}});
    CHECK(point.dim() == 0);
    CHECK(point.facet_count() == 1);

    SimplicialComplex absorbed = SimplicialComplex::from_facets(3, {{1, 2}, {1, 2, 3}});
    CHECK(absorbed.facet_count() == 1);
    CHECK(absorbed.facets().front() == Face{1, 2, 3});
}

TEST_CASE("from_facets rejects bad input") {
    CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {{1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{}}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(0, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{2, 2}}), std::invalid_argument);
}

TEST_CASE("faces_of_dim enumerates downward closure") {
    SimplicialComplex c = example_2_1();
    auto edges = c.faces_of_dim(1);
    std::set<Face> expected{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 4}, {4, 5}};
    CHECK(std::set<Face>(edges.begin(), edges.end()) == expected);
    CHECK(c.faces_of_dim(2).size() == 2);
    CHECK(c.faces_of_dim(-1) == std::vector<Face>{Face{}});
    CHECK(c.faces_of_dim(3).empty());
    CHECK(c.faces_of_dim(-2).empty());
    CHECK(std::is_sorted(edges.begin(), edges.end()));
}

TEST_CASE("f-vectors of the named complexes") {
    CHECK(example_2_1().f_vector() == fv({1, 5, 6, 2}));
    CHECK(octahedron().f_vector() == fv({1, 6, 12, 8}));
    CHECK(SimplicialComplex::from_facets(1, {{1}}).f_vector() == fv({1, 1}));
    CHECK(torus_7().f_vector() == fv({1, 7, 21, 14}));
    CHECK(tetrahedron_boundary().f_vector() == fv({1, 4, 6, 4}));
}

TEST_CASE("skeleton") {
    SimplicialComplex triangle = SimplicialComplex::from_facets(3, {{1, 2, 3}});
    SimplicialComplex boundary = triangle.skeleton(1);
    CHECK(boundary.f_vector() == fv({1, 3, 3}));
    CHECK(boundary.facet_count() == 3);

    SimplicialComplex oct = octahedron();
    CHECK(oct.skeleton(2) == oct);
    CHECK(oct.skeleton(5) == oct);
    CHECK(oct.skeleton(1).f_vector() == fv({1, 6, 12}));
    CHECK_THROWS_AS(oct.skeleton(-1), std::invalid_argument);
}

TEST_CASE("one_skeleton_graph keeps isolated vertices") {
    Graph c4 = cycle_complex(4).one_skeleton_graph();
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);

    SimplicialComplex lonely = SimplicialComplex::from_facets(2, {{1}});
    Graph g = lonely.one_skeleton_graph();
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 0);
    CHECK(lonely.zero_face_vertices() == std::vector<int>{1});
}

TEST_CASE("ridges") {
    CHECK(tetrahedron_boundary().ridges().size() == 6);
    CHECK(octahedron().ridges().size() == 12);
    CHECK(SimplicialComplex::from_facets(3, {{1, 2, 3}}).ridges().size() == 3);
    CHECK_THROWS_AS(example_2_1().ridges(), std::invalid_argument);
}

TEST_CASE("dual graphs of the closed surfaces") {
    Graph cube = octahedron().dual_graph();
    CHECK(cube.vertex_count() == 8);
    CHECK(cube.edge_count() == 12);
    for (int v = 1; v <= 8; ++v) CHECK(cube.degree(v) == 3);
    CHECK(is_bipartite(cube).bipartite);

    Graph k4 = tetrahedron_boundary().dual_graph();
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK_FALSE(is_bipartite(k4).bipartite);

    Graph single = SimplicialComplex::from_facets(3, {{1, 2, 3}}).dual_graph();
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    CHECK_THROWS_AS(example_2_1().dual_graph(), std::invalid_argument);
}

TEST_CASE("pseudomanifold classification") {
    using Kind = PseudomanifoldStatus::Kind;
    CHECK(octahedron().pseudomanifold_status().kind == Kind::WithoutBoundary);
    CHECK(torus_7().pseudomanifold_status().kind == Kind::WithoutBoundary);
    CHECK(cycle_complex(4).pseudomanifold_status().kind == Kind::WithoutBoundary);
    CHECK(example_2_1().pseudomanifold_status().kind == Kind::NotPseudomanifold);

    PseudomanifoldStatus triangle =
        SimplicialComplex::from_facets(3, {{1, 2, 3}}).pseudomanifold_status();
    CHECK(triangle.kind == Kind::WithBoundary);
    CHECK(triangle.boundary_ridges.size() == 3);

    // three triangles around one shared edge
    PseudomanifoldStatus fan =
        SimplicialComplex::from_facets(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}})
            .pseudomanifold_status();
    CHECK(fan.kind == Kind::NotPseudomanifold);

    // two triangles meeting in a single vertex: disconnected dual graph
    PseudomanifoldStatus pinched =
        SimplicialComplex::from_facets(5, {{1, 2, 3}, {3, 4, 5}}).pseudomanifold_status();
    CHECK(pinched.kind == Kind::NotPseudomanifold);
}

TEST_CASE("barycentric subdivision") {
    SimplicialComplex triangle = SimplicialComplex::from_facets(3, {{1, 2, 3}});
    SimplicialComplex sd = triangle.barycentric_subdivision();
    CHECK(sd.vertex_count() == 7);
    CHECK(sd.faces_of_dim(2).size() == 6);

    CHECK(tetrahedron_boundary().barycentric_subdivision().f_vector() == fv({1, 14, 36, 24}));

    SimplicialComplex edge = SimplicialComplex::from_facets(2, {{1, 2}});
    SimplicialComplex path = edge.barycentric_subdivision();
    CHECK(path.f_vector() == fv({1, 3, 2}));
}

TEST_CASE("barycentric subdivision preserves closed pseudomanifolds") {
    using Kind = PseudomanifoldStatus::Kind;
    for (const SimplicialComplex& c : {octahedron(), tetrahedron_boundary(), torus_7()}) {
        SimplicialComplex sd = c.barycentric_subdivision();
        CHECK(sd.pseudomanifold_status().kind == Kind::WithoutBoundary);
    }
}

TEST_CASE("ridge count identity for closed pseudomanifolds") {
    // every ridge lies in exactly two facets, every facet has d+1 ridges
    for (const SimplicialComplex& c :
         {octahedron(), tetrahedron_boundary(), torus_7(),
          octahedron().barycentric_subdivision(),
          tetrahedron_boundary().barycentric_subdivision()}) {
        const int d = c.dim();
        FVector f = c.f_vector();
        CHECK(2 * f[d - 1] == (d + 1) * f[d]);
    }
}

TEST_CASE("independence complexes") {
    SimplicialComplex path7 = path_independence_complex(7);
    CHECK(path7.faces_of_dim(0).size() == 7);
    CHECK(path7.faces_of_dim(1).size() == 15);

    SimplicialComplex edgeless = independence_complex(Graph(3, {}));
    CHECK(edgeless.facet_count() == 1);
    CHECK(edgeless.facets().front() == Face{1, 2, 3});

    SimplicialComplex triangle_graph =
        independence_complex(Graph(3, {{1, 2}, {2, 3}, {1, 3}}));
    CHECK(triangle_graph.facet_count() == 3);
    CHECK(triangle_graph.dim() == 0);
}

TEST_CASE("builtin lookup") {
    CHECK(builtin("cycle(4)") == cycle_complex(4));
    CHECK(builtin("cycle(4)").facets() ==
          std::vector<Face>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
    CHECK(builtin("octahedron").f_vector() == fv({1, 6, 12, 8}));
    CHECK(builtin("torus_7").f_vector() == fv({1, 7, 21, 14}));
    CHECK(builtin("path_independence(7)") == path_independence_complex(7));
    CHECK_THROWS_AS(builtin("klein_bottle"), std::invalid_argument);
    CHECK_THROWS_AS(builtin("cycle(two)"), std::invalid_argument);
    CHECK_THROWS_AS(builtin("cycle(2)"), std::invalid_argument);
}

TEST_CASE("downward closure and antichain on random complexes") {
    RandomComplexSource source(8, 99);
    for (int t = 0; t < 25; ++t) {
        SimplicialComplex c = source.next();
        for (const Face& f : c.facets())
            for (const Face& g : c.facets())
                if (!(f == g)) CHECK_FALSE(f.contains_face(g));
        for (int k = 1; k <= c.dim(); ++k) {
            const auto& faces = c.faces_of_dim(k);
            const auto& below = c.faces_of_dim(k - 1);
            std::set<Face> below_set(below.begin(), below.end());
            for (const Face& f : faces)
                for (int v : f.vertices())
                    CHECK(below_set.count(f.without_vertex(v)) == 1);
        }
    }
}

TEST_CASE("dual graph of a pseudomanifold is connected") {
    for (const SimplicialComplex& c :
         {octahedron(), torus_7(), tetrahedron_boundary(),
          octahedron().barycentric_subdivision()}) {
        CHECK(components(c.dual_graph()).components.size() == 1);
    }
}

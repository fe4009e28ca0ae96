#include <doctest.h>

#include <map>

#include "wlp/builtins.hpp"
#include "wlp/random_complex.hpp"
#include "wlp/rank.hpp"
#include "wlp/wlp_check.hpp"

using namespace wlp;

TEST_CASE("rank verdicts on the named examples") {
    AlgebraModel path7{path_independence_complex(7)};
    DegreeCheck d1 = wlp_in_degree_by_rank(path7, 1);
    CHECK(d1.verdict == Verdict::HoldsInjective);
    CHECK(*d1.rank == 7);

    AlgebraModel c4{cycle_complex(4)};
    DegreeCheck c4d1 = wlp_in_degree_by_rank(c4, 1);
    CHECK(c4d1.verdict == Verdict::Fails);
    CHECK(*c4d1.rank == 3);

    AlgebraModel oct{octahedron()};
    CHECK(wlp_in_degree_by_rank(oct, 2).verdict == Verdict::Fails);
    CHECK(wlp_in_degree_by_rank(oct, 1).verdict == Verdict::HoldsInjective);
}

TEST_CASE("full reports") {
    WlpReport ex = wlp_full(AlgebraModel{example_2_1()});
    CHECK(ex.wlp);
    CHECK(ex.degrees.size() == 4); // degrees 0..3
    CHECK(ex.degrees[1].dim_from == 5);
    CHECK(ex.degrees[1].dim_to == 6);
    CHECK(ex.degrees[2].dim_from == 6);
    CHECK(ex.degrees[2].dim_to == 2);

    WlpReport c4 = wlp_full(AlgebraModel{cycle_complex(4)});
    CHECK_FALSE(c4.wlp);
    CHECK(c4.degrees[1].verdict == Verdict::Fails);

    WlpReport tet = wlp_full(AlgebraModel{tetrahedron_boundary()});
    CHECK(tet.wlp);
    CHECK(holds(tet.degrees[1].verdict));
    CHECK(holds(tet.degrees[2].verdict));
}

TEST_CASE("the propagation shortcut is validated by rank") {
    // path-7 independence complex: dims (1,7,15,10,1) drop from degree 2 on,
    // so a surjective degree 2 lets degree 3 skip its rank computation
    AlgebraModel a{path_independence_complex(7)};
    WlpReport report = wlp_full(a);
    REQUIRE(report.degrees.size() == 5);
    CHECK(report.degrees[2].verdict == Verdict::HoldsSurjective);
    CHECK(report.degrees[2].method == Method::Rank);
    CHECK(report.degrees[3].method == Method::Trivial);
    CHECK(report.degrees[3].verdict == Verdict::HoldsSurjective);
    CHECK(report.degrees[3].certificate.contains("surjective_by_propagation_from_degree"));
    // re-check the skipped degree by rank
    DegreeCheck direct = wlp_in_degree_by_rank(a, 3);
    CHECK(direct.verdict == Verdict::HoldsSurjective);
}

TEST_CASE("degree-1 criterion: case (i)") {
    for (int n = 5; n <= 9; ++n) {
        CriterionDeg1Result res = criterion_degree1(path_independence_complex(n));
        CHECK(res.case_tag == 1);
        CHECK(holds(res.verdict));
    }

    CriterionDeg1Result c4 = criterion_degree1(cycle_complex(4));
    CHECK(c4.case_tag == 1);
    CHECK(c4.verdict == Verdict::Fails);
    CHECK(c4.certificate.contains("bipartite_component"));

    CriterionDeg1Result c5 = criterion_degree1(cycle_complex(5));
    CHECK(c5.case_tag == 1);
    CHECK(c5.verdict == Verdict::HoldsBijective);
}

TEST_CASE("degree-1 criterion: case (ii)") {
    // triangle with a pendant edge (|E| = |V|, nonbipartite) plus an isolated
    // vertex (a tree): dim A_2 = 4 < dim A_1 = 5
    SimplicialComplex mixed = SimplicialComplex::from_facets(5, {{1, 2, 3}, {3, 4}, {5}});
    CriterionDeg1Result res = criterion_degree1(mixed);
    CHECK(res.case_tag == 2);
    CHECK(res.verdict == Verdict::HoldsSurjective);
    CHECK(res.implies_all_degrees);
    // and indeed WLP holds in all degrees
    WlpReport full = wlp_full(AlgebraModel{mixed});
    CHECK(full.wlp);

    // a 4-cycle plus an isolated vertex: bipartite non-tree component
    SimplicialComplex bad = SimplicialComplex::from_facets(
        5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {5}});
    CriterionDeg1Result bad_res = criterion_degree1(bad);
    CHECK(bad_res.case_tag == 2);
    CHECK(bad_res.verdict == Verdict::Fails);
    CHECK(bad_res.certificate.contains("offending_component"));

    // two disjoint edges: every component a tree
    SimplicialComplex forest = SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}});
    CriterionDeg1Result forest_res = criterion_degree1(forest);
    CHECK(forest_res.case_tag == 2);
    CHECK(forest_res.verdict == Verdict::HoldsSurjective);
}

TEST_CASE("vertices outside every facet do not disturb the criterion") {
    // same complex, one phantom vertex: rank and criterion must keep agreeing
    SimplicialComplex plain = path_independence_complex(5);
    std::vector<std::vector<int>> facets;
    for (const Face& f : plain.facets()) facets.push_back(f.vertices());
    SimplicialComplex padded = SimplicialComplex::from_facets(6, facets);

    CriterionDeg1Result crit = criterion_degree1(padded);
    DegreeCheck by_rank = wlp_in_degree_by_rank(AlgebraModel{padded}, 1);
    CHECK(crit.verdict == by_rank.verdict);
    CHECK(holds(crit.verdict));

    // the full-graph incidence rank identity still sees the phantom vertex
    ComponentSummary summary = components(padded.one_skeleton_graph());
    CHECK(*by_rank.rank == padded.vertex_count() - summary.bipartite_count);
}

TEST_CASE("top-degree criterion") {
    CriterionTopResult oct = criterion_top_degree(octahedron());
    CHECK(oct.verdict == Verdict::Fails);
    CHECK(oct.certificate.contains("face_two_coloring"));
    CHECK(oct.certificate["face_two_coloring"][0].size() == 4);

    CriterionTopResult tet = criterion_top_degree(tetrahedron_boundary());
    CHECK(tet.verdict == Verdict::HoldsSurjective);
    CHECK(tet.certificate.contains("dual_graph_odd_cycle"));

    CriterionTopResult triangle =
        criterion_top_degree(SimplicialComplex::from_facets(3, {{1, 2, 3}}));
    CHECK(triangle.verdict == Verdict::HoldsSurjective);
    CHECK(triangle.boundary_case);

    CHECK_THROWS_AS(criterion_top_degree(example_2_1()), std::invalid_argument);
}

TEST_CASE("boundary chains are genuine preimages") {
    // drop one facet from each closed surface and verify the construction
    for (SimplicialComplex closed : {octahedron(), tetrahedron_boundary(), torus_7()}) {
        std::vector<std::vector<int>> facets;
        for (std::size_t i = 1; i < closed.facets().size(); ++i)
            facets.push_back(closed.facets()[i].vertices());
        SimplicialComplex open_complex =
            SimplicialComplex::from_facets(closed.vertex_count(), facets);
        REQUIRE(open_complex.pseudomanifold_status().kind ==
                PseudomanifoldStatus::Kind::WithBoundary);

        CriterionTopResult res = criterion_top_degree(open_complex);
        REQUIRE(res.boundary_case);

        AlgebraModel a{open_complex};
        const int d = open_complex.dim();
        IntMatrix mu = a.multiplication_matrix(d, LinearForm::all_ones(a.variable_count()));
        std::map<Face, int> ridge_index, facet_index;
        const auto& ridges = a.basis(d);
        const auto& top_faces = a.basis(d + 1);
        for (std::size_t i = 0; i < ridges.size(); ++i)
            ridge_index.emplace(ridges[i], static_cast<int>(i));
        for (std::size_t i = 0; i < top_faces.size(); ++i)
            facet_index.emplace(top_faces[i], static_cast<int>(i));

        for (const auto& chain : res.certificate["chains"]) {
            IntMatrix coeffs(static_cast<int>(ridges.size()), 1);
            for (const auto& term : chain["preimage"]) {
                Face ridge(term["ridge"].get<std::vector<int>>());
                coeffs.at(ridge_index.at(ridge), 0) += term["sign"].get<int>();
            }
            IntMatrix image = mu.multiply(coeffs);
            Face target(chain["facet"].get<std::vector<int>>());
            for (int r = 0; r < image.rows(); ++r)
                CHECK(image.at(r, 0) == (r == facet_index.at(target) ? 1 : 0));
        }
    }
}

TEST_CASE("two-dimensional pseudomanifold characterization") {
    WlpReport oct = check_dim2_pseudomanifold(octahedron());
    CHECK_FALSE(oct.wlp);
    CHECK(oct.degrees[2].verdict == Verdict::Fails);
    CHECK(holds(oct.degrees[1].verdict));

    WlpReport bary = check_dim2_pseudomanifold(tetrahedron_boundary().barycentric_subdivision());
    CHECK_FALSE(bary.wlp);
    CHECK(bary.degrees[2].verdict == Verdict::Fails);

    WlpReport torus = check_dim2_pseudomanifold(torus_7());
    CHECK_FALSE(torus.wlp);
    CHECK(torus.degrees[2].verdict == Verdict::Fails);

    WlpReport tet = check_dim2_pseudomanifold(tetrahedron_boundary());
    CHECK(tet.wlp);

    // agreement with the rank route
    for (const SimplicialComplex& c :
         {octahedron(), torus_7(), tetrahedron_boundary(),
          tetrahedron_boundary().barycentric_subdivision()}) {
        WlpReport combinatorial = check_dim2_pseudomanifold(c);
        WlpReport by_rank = wlp_full(AlgebraModel{c});
        CHECK(combinatorial.wlp == by_rank.wlp);
        for (std::size_t i = 0; i < combinatorial.degrees.size(); ++i)
            CHECK(holds(combinatorial.degrees[i].verdict) ==
                  holds(by_rank.degrees[i].verdict));
    }

    CHECK_THROWS_AS(check_dim2_pseudomanifold(cycle_complex(4)), std::invalid_argument);
    CHECK_THROWS_AS(check_dim2_pseudomanifold(example_2_1()), std::invalid_argument);
}

TEST_CASE("eulerian criterion for planar triangulations") {
    CHECK(eulerian_criterion(octahedron(), true) == Verdict::Fails);
    CHECK(eulerian_criterion(tetrahedron_boundary(), true) == Verdict::HoldsSurjective);
    CHECK_THROWS_AS(eulerian_criterion(octahedron(), false), std::invalid_argument);
    CHECK_THROWS_AS(eulerian_criterion(cycle_complex(4), true), std::invalid_argument);
    SimplicialComplex triangle = SimplicialComplex::from_facets(3, {{1, 2, 3}});
    CHECK_THROWS_AS(eulerian_criterion(triangle, true), std::invalid_argument);

    // agreement with the dual-graph route on the spheres
    for (const SimplicialComplex& c :
         {octahedron(), tetrahedron_boundary(),
          tetrahedron_boundary().barycentric_subdivision()}) {
        CHECK(holds(eulerian_criterion(c, true)) ==
              holds(criterion_top_degree(c).verdict));
    }
}

TEST_CASE("socle vs clique bound") {
    SocleBoundCheck ex = socle_clique_bound_check(example_2_1());
    CHECK(ex.socle_degree == 3);
    CHECK(ex.clique_number == 3);
    CHECK(ex.ok());

    SocleBoundCheck c4 = socle_clique_bound_check(cycle_complex(4));
    CHECK(c4.socle_degree == 2);
    CHECK(c4.clique_number == 2);
    CHECK(c4.ok());

    // full simplex on m vertices: socle degree m, clique number m
    for (int m = 2; m <= 6; ++m) {
        std::vector<int> verts;
        for (int v = 1; v <= m; ++v) verts.push_back(v);
        SocleBoundCheck simplex =
            socle_clique_bound_check(SimplicialComplex::from_facets(m, {verts}));
        CHECK(simplex.socle_degree == m);
        CHECK(simplex.clique_number == m);
        CHECK(simplex.ok());
    }

    CHECK_THROWS_AS(
        socle_clique_bound_check(octahedron().barycentric_subdivision(), 10),
        std::invalid_argument);
}

TEST_CASE("cross-validation finds no disagreement on builtins") {
    for (const SimplicialComplex& c :
         {example_2_1(), octahedron(), tetrahedron_boundary(), torus_7(), cycle_complex(4),
          cycle_complex(5), cycle_complex(7), path_independence_complex(5),
          path_independence_complex(7)}) {
        AgreementReport report = cross_validate(c);
        CHECK(report.ok());
        CHECK(report.degrees_checked > 0);
    }
}

TEST_CASE("cross-validation on random complexes") {
    RandomComplexSource source(9, 1234);
    for (int t = 0; t < 40; ++t) {
        SimplicialComplex c = source.next();
        AgreementReport report = cross_validate(c);
        if (!report.ok())
            for (const std::string& d : report.disagreements)
                MESSAGE(report.complex_summary, ": ", d);
        CHECK(report.ok());
    }
}

TEST_CASE("odd cycles: rank verdict matches the case (ii) tally") {
    for (int m = 3; m <= 11; m += 2) {
        SimplicialComplex c = cycle_complex(m);
        CriterionDeg1Result crit = criterion_degree1(c);
        DegreeCheck by_rank = wlp_in_degree_by_rank(AlgebraModel{c}, 1);
        CHECK(holds(crit.verdict));
        CHECK(crit.verdict == by_rank.verdict);
    }
}

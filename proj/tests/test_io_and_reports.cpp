#include <doctest.h>

#include <sstream>

#include "wlp/builtins.hpp"
#include "wlp/facet_io.hpp"
#include "wlp/random_complex.hpp"
#include "wlp/wlp_check.hpp"

using namespace wlp;

TEST_CASE("facet files parse with and without the header") {
    std::istringstream with_header("n 5\n# a comment\n1 2 3\n1 3 4\n\n4 5\n");
    SimplicialComplex c = parse_facets(with_header);
    CHECK(c == example_2_1());

    std::istringstream bare("1 2\n2 3\n");
    SimplicialComplex path = parse_facets(bare);
    CHECK(path.vertex_count() == 3);
    CHECK(path.f_vector() == FVector{{1, 3, 2}});

    // unsorted labels are accepted and normalized
    std::istringstream unsorted("3 1 2\n");
    CHECK(parse_facets(unsorted).facets().front() == Face{1, 2, 3});
}

TEST_CASE("facet parse errors carry line numbers") {
    std::istringstream zero_label("1 2\n0 3\n");
    CHECK_THROWS_WITH_AS(parse_facets(zero_label), doctest::Contains("line 2"),
                         FacetParseError);

    std::istringstream junk("1 2\n2 x\n");
    CHECK_THROWS_AS(parse_facets(junk), FacetParseError);

    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_facets(empty), FacetParseError);

    std::istringstream bad_header("n 0\n1 2\n");
    CHECK_THROWS_AS(parse_facets(bad_header), FacetParseError);

    std::istringstream exceeds("n 2\n1 2 3\n");
    CHECK_THROWS_AS(parse_facets(exceeds), FacetParseError);

    CHECK_THROWS_AS(load_facet_file("/nonexistent/path/facets.txt"), std::runtime_error);
}

TEST_CASE("serialize then parse round-trips") {
    RandomComplexSource source(8, 5150);
    for (int t = 0; t < 10; ++t) {
        SimplicialComplex c = source.next();
        std::istringstream in(serialize_facets(c));
        CHECK(parse_facets(in) == c);
    }
}

TEST_CASE("json reports round-trip byte-identically") {
    for (const SimplicialComplex& c : {example_2_1(), octahedron(), cycle_complex(4)}) {
        WlpReport report = wlp_full(AlgebraModel{c});
        json j = report.to_json(c);
        std::string text = j.dump(2);
        CHECK(json::parse(text).dump(2) == text);

        CHECK(j["schema"] == 1);
        CHECK(j["complex"]["n"] == c.vertex_count());
        CHECK(j["degrees"].size() == report.degrees.size());
        CHECK(j["wlp"] == report.wlp);
    }
}

TEST_CASE("degree entries expose the documented fields") {
    WlpReport report = wlp_full(AlgebraModel{octahedron()});
    json j = report.to_json(octahedron());
    const json& deg2 = j["degrees"][2];
    CHECK(deg2["i"] == 2);
    CHECK(deg2["dim_from"] == 12);
    CHECK(deg2["dim_to"] == 8);
    CHECK(deg2["verdict"] == "fails");
    CHECK(deg2["method"] == "rank");
    CHECK(deg2["rank"] == 7);
}

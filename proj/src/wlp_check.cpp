#include "wlp/wlp_check.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "wlp/rank.hpp"

namespace wlp {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::HoldsInjective: return "holds-injective";
        case Verdict::HoldsSurjective: return "holds-surjective";
        case Verdict::HoldsBijective: return "holds-bijective";
        case Verdict::Fails: return "fails";
    }
    return "?";
}

const char* to_string(Method m) {
    switch (m) {
        case Method::Rank: return "rank";
        case Method::CriterionDeg1: return "criterion-deg1";
        case Method::CriterionPseudomanifold: return "criterion-pseudomanifold";
        case Method::Trivial: return "trivial";
    }
    return "?";
}

Verdict verdict_from_rank(long dim_from, long dim_to, long rank) {
    if (rank < std::min(dim_from, dim_to)) return Verdict::Fails;
    if (dim_from == dim_to) return Verdict::HoldsBijective;
    return dim_from < dim_to ? Verdict::HoldsInjective : Verdict::HoldsSurjective;
}

json DegreeCheck::to_json() const {
    json j;
    j["i"] = degree;
    j["dim_from"] = dim_from;
    j["dim_to"] = dim_to;
    j["verdict"] = to_string(verdict);
    j["method"] = to_string(method);
    j["rank"] = rank ? json(*rank) : json(nullptr);
    j["certificate"] = certificate.is_null() ? json(nullptr) : certificate;
    return j;
}

json WlpReport::to_json(const SimplicialComplex& complex) const {
    json j;
    j["schema"] = 1;
    json facets = json::array();
    for (const Face& f : complex.facets()) facets.push_back(f.vertices());
    j["complex"] = {{"n", complex.vertex_count()}, {"facets", facets}};
    j["f_vector"] = f_vector.entries;
    j["socle"] = {{"degree", socle_degree}, {"level", level}};
    json degs = json::array();
    for (const DegreeCheck& d : degrees) degs.push_back(d.to_json());
    j["degrees"] = degs;
    j["wlp"] = wlp;
    return j;
}

DegreeCheck wlp_in_degree_by_rank(const AlgebraModel& a, int i) {
    DegreeCheck check;
    check.degree = i;
    check.dim_from = a.dim(i);
    check.dim_to = a.dim(i + 1);
    IntMatrix m = a.multiplication_matrix(i, LinearForm::all_ones(a.variable_count()));
    RankResult r = rank(m);
    check.rank = r.rank;
    check.verdict = verdict_from_rank(check.dim_from, check.dim_to, r.rank);
    check.method = Method::Rank;
    return check;
}

WlpReport wlp_full(const AlgebraModel& a) {
    WlpReport report;
    report.f_vector = a.complex().f_vector();
    SocleInfo soc = a.socle();
    report.socle_degree = soc.degree;
    report.level = soc.level;

    const int top = a.socle_degree();
    bool propagate_surjective = false;
    int propagate_from = -1;
    for (int i = 0; i <= top; ++i) {
        DegreeCheck check;
        check.degree = i;
        check.dim_from = a.dim(i);
        check.dim_to = a.dim(i + 1);
        if (i == 0) {
            // 1 -> ell is injective since ell is nonzero in degree 1
            check.method = Method::Trivial;
            check.verdict = check.dim_to == 1 ? Verdict::HoldsBijective : Verdict::HoldsInjective;
        } else if (i == top) {
            // the target is the zero space
            check.method = Method::Trivial;
            check.verdict = Verdict::HoldsSurjective;
        } else if (propagate_surjective) {
            check.method = Method::Trivial;
            check.verdict = Verdict::HoldsSurjective;
            check.certificate = {{"surjective_by_propagation_from_degree", propagate_from}};
        } else {
            check = wlp_in_degree_by_rank(a, i);
        }
        if (!propagate_surjective && check.dim_from > check.dim_to &&
            (check.verdict == Verdict::HoldsSurjective ||
             check.verdict == Verdict::HoldsBijective)) {
            propagate_surjective = true;
            propagate_from = i;
        }
        report.degrees.push_back(std::move(check));
    }
    report.wlp = std::all_of(report.degrees.begin(), report.degrees.end(),
                             [](const DegreeCheck& d) { return holds(d.verdict); });
    return report;
}

namespace {

json component_json(const Component& c) {
    return {{"vertices", c.vertices},
            {"edge_count", c.edge_count},
            {"bipartite", c.bipartite},
            {"is_tree", c.is_tree}};
}

} // namespace

CriterionDeg1Result criterion_degree1(const SimplicialComplex& complex) {
    CriterionDeg1Result result;

    // Components of the skeleton restricted to actual 0-faces: a vertex in no
    // facet is not a degree-1 monomial, so it plays no role at degree 1.
    std::vector<int> zero_faces = complex.zero_face_vertices();
    std::set<int> zero_face_set(zero_faces.begin(), zero_faces.end());
    ComponentSummary all = components(complex.one_skeleton_graph());
    std::vector<Component> comps;
    int bipartite_count = 0;
    for (Component& c : all.components) {
        if (c.vertices.size() == 1 && !zero_face_set.count(c.vertices.front())) continue;
        if (c.bipartite) ++bipartite_count;
        comps.push_back(std::move(c));
    }

    const long dim_a1 = static_cast<long>(zero_faces.size());
    const long dim_a2 = static_cast<long>(complex.faces_of_dim(1).size());

    if (dim_a2 >= dim_a1) {
        result.case_tag = 1;
        if (bipartite_count == 0) {
            result.verdict = verdict_from_rank(dim_a1, dim_a2, dim_a1);
            result.certificate = {{"case", "i"}, {"bipartite_components", 0}};
        } else {
            result.verdict = Verdict::Fails;
            auto offender = std::find_if(comps.begin(), comps.end(),
                                         [](const Component& c) { return c.bipartite; });
            result.certificate = {{"case", "i"},
                                  {"bipartite_component", component_json(*offender)}};
        }
        return result;
    }

    result.case_tag = 2;
    const Component* offender = nullptr;
    for (const Component& c : comps) {
        bool ok = c.bipartite ? c.is_tree
                              : c.edge_count == static_cast<int>(c.vertices.size());
        if (!ok) { offender = &c; break; }
    }
    if (offender == nullptr) {
        result.verdict = Verdict::HoldsSurjective;
        result.implies_all_degrees = true;
        json tally = json::array();
        for (const Component& c : comps) tally.push_back(component_json(c));
        result.certificate = {{"case", "ii"}, {"components", tally}};
    } else {
        result.verdict = Verdict::Fails;
        result.certificate = {{"case", "ii"}, {"offending_component", component_json(*offender)}};
    }
    return result;
}

namespace {

// Preimage chains realizing surjectivity at the top degree of a
// pseudomanifold with boundary: for each facet, an alternating +/- sequence
// of ridges whose image under the top multiplication map is that facet.
json boundary_chain_certificate(const SimplicialComplex& complex,
                                const std::vector<Face>& boundary_ridges) {
    const std::vector<Face>& facets = complex.facets();
    const int m = static_cast<int>(facets.size());

    // boundary ridge for each boundary facet
    std::vector<int> boundary_ridge_of(static_cast<std::size_t>(m), -1);
    for (std::size_t r = 0; r < boundary_ridges.size(); ++r)
        for (int f = 0; f < m; ++f)
            if (facets[static_cast<std::size_t>(f)].contains_face(boundary_ridges[r])) {
                if (boundary_ridge_of[static_cast<std::size_t>(f)] < 0)
                    boundary_ridge_of[static_cast<std::size_t>(f)] = static_cast<int>(r);
                break; // a boundary ridge lies in exactly one facet
            }

    // multi-source BFS on the dual graph from the boundary facets, keeping
    // the connecting ridge toward the boundary
    Graph dual = complex.dual_graph();
    std::vector<int> next_facet(static_cast<std::size_t>(m), -1);
    std::vector<Face> ridge_to_next(static_cast<std::size_t>(m));
    std::deque<int> queue;
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    for (int f = 0; f < m; ++f)
        if (boundary_ridge_of[static_cast<std::size_t>(f)] >= 0) {
            seen[static_cast<std::size_t>(f)] = 1;
            queue.push_back(f);
        }
    auto shared_ridge = [&](int a, int b) {
        std::vector<int> common;
        const auto& va = facets[static_cast<std::size_t>(a)].vertices();
        const auto& vb = facets[static_cast<std::size_t>(b)].vertices();
        std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                              std::back_inserter(common));
        return Face(std::move(common));
    };
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        for (int g1 : dual.neighbors(f + 1)) {
            int g = g1 - 1;
            if (seen[static_cast<std::size_t>(g)]) continue;
            seen[static_cast<std::size_t>(g)] = 1;
            next_facet[static_cast<std::size_t>(g)] = f;
            ridge_to_next[static_cast<std::size_t>(g)] = shared_ridge(g, f);
            queue.push_back(g);
        }
    }

    json chains = json::array();
    for (int f = 0; f < m; ++f) {
        // ridges along the facet chain from f to the boundary, then the
        // boundary ridge itself; signs alternate starting at +1
        std::vector<Face> ridge_seq;
        int cur = f;
        while (boundary_ridge_of[static_cast<std::size_t>(cur)] < 0) {
            ridge_seq.push_back(ridge_to_next[static_cast<std::size_t>(cur)]);
            cur = next_facet[static_cast<std::size_t>(cur)];
        }
        ridge_seq.push_back(
            boundary_ridges[static_cast<std::size_t>(boundary_ridge_of[static_cast<std::size_t>(cur)])]);
        json terms = json::array();
        int sign = 1;
        for (const Face& r : ridge_seq) {
            terms.push_back({{"ridge", r.vertices()}, {"sign", sign}});
            sign = -sign;
        }
        chains.push_back({{"facet", facets[static_cast<std::size_t>(f)].vertices()},
                          {"preimage", terms}});
    }
    return chains;
}

} // namespace

CriterionTopResult criterion_top_degree(const SimplicialComplex& complex) {
    PseudomanifoldStatus status = complex.pseudomanifold_status();
    if (!status.is_pseudomanifold())
        throw std::invalid_argument("criterion_top_degree: not a pseudomanifold (" +
                                    status.reason + ")");

    CriterionTopResult result;
    const long dim_from = static_cast<long>(complex.ridges().size());
    const long dim_to = static_cast<long>(complex.facet_count());

    if (status.kind == PseudomanifoldStatus::Kind::WithBoundary) {
        result.boundary_case = true;
        result.verdict = verdict_from_rank(dim_from, dim_to, dim_to);
        result.certificate = {{"boundary_case", true},
                              {"chains", boundary_chain_certificate(complex, status.boundary_ridges)}};
        return result;
    }

    BipartiteCheck bip = is_bipartite(complex.dual_graph());
    if (!bip.bipartite) {
        result.verdict = verdict_from_rank(dim_from, dim_to, dim_to);
        result.certificate = {{"boundary_case", false},
                              {"dual_graph_odd_cycle", bip.odd_closed_walk}};
    } else {
        result.verdict = Verdict::Fails;
        // a 2-coloring of the dual graph is a proper face 2-coloring
        std::vector<int> color0, color1;
        for (int f = 1; f <= complex.facet_count(); ++f)
            (bip.coloring[static_cast<std::size_t>(f)] == 0 ? color0 : color1).push_back(f);
        result.certificate = {{"boundary_case", false},
                              {"face_two_coloring", {color0, color1}}};
    }
    return result;
}

WlpReport check_dim2_pseudomanifold(const SimplicialComplex& complex) {
    if (complex.dim() != 2)
        throw std::invalid_argument("check_dim2_pseudomanifold: complex is not 2-dimensional");
    PseudomanifoldStatus status = complex.pseudomanifold_status();
    if (!status.is_pseudomanifold())
        throw std::invalid_argument("check_dim2_pseudomanifold: not a pseudomanifold (" +
                                    status.reason + ")");

    AlgebraModel a{complex};
    WlpReport report;
    report.f_vector = complex.f_vector();
    SocleInfo soc = a.socle();
    report.socle_degree = soc.degree;
    report.level = soc.level;

    DegreeCheck deg0;
    deg0.degree = 0;
    deg0.dim_from = 1;
    deg0.dim_to = a.dim(1);
    deg0.method = Method::Trivial;
    deg0.verdict = deg0.dim_to == 1 ? Verdict::HoldsBijective : Verdict::HoldsInjective;
    report.degrees.push_back(deg0);

    // degree 1 always holds: the skeleton is connected with triangles, and
    // every vertex lies in >= 2 edges so dim A_2 >= dim A_1
    CriterionDeg1Result deg1 = criterion_degree1(complex);
    if (!holds(deg1.verdict))
        throw std::logic_error("check_dim2_pseudomanifold: degree 1 must hold");
    DegreeCheck check1;
    check1.degree = 1;
    check1.dim_from = a.dim(1);
    check1.dim_to = a.dim(2);
    check1.verdict = deg1.verdict;
    check1.method = Method::CriterionDeg1;
    check1.certificate = deg1.certificate;
    report.degrees.push_back(std::move(check1));

    CriterionTopResult top = criterion_top_degree(complex);
    DegreeCheck check2;
    check2.degree = 2;
    check2.dim_from = a.dim(2);
    check2.dim_to = a.dim(3);
    check2.verdict = top.verdict;
    check2.method = Method::CriterionPseudomanifold;
    check2.certificate = top.certificate;
    report.degrees.push_back(std::move(check2));

    DegreeCheck deg3;
    deg3.degree = 3;
    deg3.dim_from = a.dim(3);
    deg3.dim_to = 0;
    deg3.method = Method::Trivial;
    deg3.verdict = Verdict::HoldsSurjective;
    report.degrees.push_back(deg3);

    report.wlp = std::all_of(report.degrees.begin(), report.degrees.end(),
                             [](const DegreeCheck& d) { return holds(d.verdict); });
    return report;
}

Verdict eulerian_criterion(const SimplicialComplex& complex, bool planar_asserted) {
    if (!planar_asserted)
        throw std::invalid_argument("eulerian_criterion: caller must assert planarity");
    if (complex.dim() != 2)
        throw std::invalid_argument("eulerian_criterion: complex is not 2-dimensional");
    PseudomanifoldStatus status = complex.pseudomanifold_status();
    if (status.kind != PseudomanifoldStatus::Kind::WithoutBoundary)
        throw std::invalid_argument("eulerian_criterion: not a pseudomanifold without boundary");
    return is_eulerian(complex.one_skeleton_graph())
               ? Verdict::Fails
               : Verdict::HoldsSurjective;
}

SocleBoundCheck socle_clique_bound_check(const SimplicialComplex& complex, int clique_bound) {
    SocleBoundCheck check;
    check.socle_degree = complex.dim() + 1;
    check.clique_number = clique_number(complex.one_skeleton_graph(), clique_bound);
    check.clique_bound_ok = check.socle_degree <= check.clique_number;

    CriterionDeg1Result deg1 = criterion_degree1(complex);
    const long dim_a1 = static_cast<long>(complex.faces_of_dim(0).size());
    const long dim_a2 = static_cast<long>(complex.faces_of_dim(1).size());
    check.soc3_applicable = holds(deg1.verdict) && dim_a2 <= dim_a1;
    if (check.soc3_applicable) check.soc3_ok = check.socle_degree <= 3;
    return check;
}

AgreementReport cross_validate(const SimplicialComplex& complex) {
    AgreementReport report;
    report.complex_summary = complex.to_string();
    AlgebraModel a{complex};
    const int top = a.socle_degree();

    std::vector<DegreeCheck> by_rank;
    for (int i = 0; i <= top; ++i) {
        by_rank.push_back(wlp_in_degree_by_rank(a, i));
        ++report.degrees_checked;
    }

    auto mismatch = [&](int degree, const std::string& what) {
        report.disagreements.push_back("degree " + std::to_string(degree) + ": " + what);
    };

    // degree-1 criterion vs rank
    if (top >= 1) {
        CriterionDeg1Result deg1 = criterion_degree1(complex);
        if (deg1.verdict != by_rank[1].verdict)
            mismatch(1, std::string("criterion-deg1 says ") + to_string(deg1.verdict) +
                            ", rank says " + to_string(by_rank[1].verdict));
        if (deg1.implies_all_degrees && holds(deg1.verdict)) {
            for (int j = 2; j <= top; ++j)
                if (!holds(by_rank[static_cast<std::size_t>(j)].verdict))
                    mismatch(j, "criterion-deg1 case (ii) implies WLP in all degrees, rank fails");
        }
    }

    // top-degree criterion vs rank, on pseudomanifolds
    PseudomanifoldStatus status = complex.pseudomanifold_status();
    if (status.is_pseudomanifold() && complex.dim() >= 1) {
        CriterionTopResult topres = criterion_top_degree(complex);
        const DegreeCheck& rank_check = by_rank[static_cast<std::size_t>(complex.dim())];
        if (topres.verdict != rank_check.verdict)
            mismatch(complex.dim(), std::string("criterion-pseudomanifold says ") +
                                        to_string(topres.verdict) + ", rank says " +
                                        to_string(rank_check.verdict));
    }

    // surjectivity propagation across strictly dropping dimensions
    for (int i = 1; i <= top; ++i) {
        const DegreeCheck& c = by_rank[static_cast<std::size_t>(i)];
        if (c.dim_from > c.dim_to &&
            (c.verdict == Verdict::HoldsSurjective || c.verdict == Verdict::HoldsBijective)) {
            for (int j = i + 1; j <= top; ++j) {
                const DegreeCheck& later = by_rank[static_cast<std::size_t>(j)];
                if (later.verdict != Verdict::HoldsSurjective &&
                    later.verdict != Verdict::HoldsBijective)
                    mismatch(j, "surjectivity fails to propagate from degree " + std::to_string(i));
            }
            break;
        }
    }

    // incidence-rank identity: rank [mu_1] = n - b_G
    if (top >= 1) {
        ComponentSummary summary = components(complex.one_skeleton_graph());
        long expected = complex.vertex_count() - summary.bipartite_count;
        if (by_rank[1].rank && *by_rank[1].rank != expected)
            mismatch(1, "rank of degree-1 matrix != n - b_G");
    }

    return report;
}

} // namespace wlp

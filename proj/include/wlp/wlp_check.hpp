#ifndef WLP_WLP_CHECK_HPP
#define WLP_WLP_CHECK_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wlp/algebra_model.hpp"
#include "wlp/simplicial_complex.hpp"

namespace wlp {

using json = nlohmann::ordered_json;

enum class Verdict { HoldsInjective, HoldsSurjective, HoldsBijective, Fails };
enum class Method { Rank, CriterionDeg1, CriterionPseudomanifold, Trivial };

const char* to_string(Verdict v);
const char* to_string(Method m);
inline bool holds(Verdict v) { return v != Verdict::Fails; }

/// Maximal-rank classification of a dim_from -> dim_to map of the given rank.
Verdict verdict_from_rank(long dim_from, long dim_to, long rank);

struct DegreeCheck {
    int degree = 0;
    long dim_from = 0;
    long dim_to = 0;
    Verdict verdict = Verdict::Fails;
    Method method = Method::Rank;
    std::optional<long> rank;
    json certificate; // null unless a criterion or construction provides one

    json to_json() const;
};

struct WlpReport {
    FVector f_vector;
    int socle_degree = 0;
    bool level = false;
    std::vector<DegreeCheck> degrees;
    bool wlp = false;

    json to_json(const SimplicialComplex& complex) const;
};

/// Rank decision for the map out of degree i, with the all-ones form
/// (a Lefschetz element for monomial quotients whenever one exists).
DegreeCheck wlp_in_degree_by_rank(const AlgebraModel& a, int i);

/// Per-degree verdicts for i = 0 .. socle degree. Degree 0 and the top degree
/// are trivial; once a surjective degree with strictly dropping dimensions is
/// found, higher degrees are marked surjective without further rank work.
WlpReport wlp_full(const AlgebraModel& a);

struct CriterionDeg1Result {
    Verdict verdict = Verdict::Fails;
    int case_tag = 1; // 1: dim A_2 >= dim A_1, 2: dim A_2 < dim A_1
    /// In case 2, a holding verdict extends to every degree.
    bool implies_all_degrees = false;
    json certificate;
};

/// Degree-1 decision from the 1-skeleton alone: case (i) no bipartite
/// components; case (ii) bipartite components are trees and nonbipartite
/// components have as many edges as vertices. Vertices outside every facet
/// are not degree-1 monomials and are ignored here.
CriterionDeg1Result criterion_degree1(const SimplicialComplex& complex);

struct CriterionTopResult {
    Verdict verdict = Verdict::Fails;
    bool boundary_case = false;
    json certificate;
};

/// Top-degree decision for pseudomanifolds: with boundary the map is
/// surjective (a ridge-chain preimage is constructed per facet); without
/// boundary it holds exactly when the dual graph is not bipartite.
/// Throws std::invalid_argument when the complex is not a pseudomanifold.
CriterionTopResult criterion_top_degree(const SimplicialComplex& complex);

/// Full WLP report for a 2-dimensional pseudomanifold using combinatorics
/// only (degree 1 always holds; degree 2 by the dual-graph criterion).
WlpReport check_dim2_pseudomanifold(const SimplicialComplex& complex);

/// Degree-2 verdict for a planar triangulation without boundary: holds iff
/// the 1-skeleton is not Eulerian. Planarity is asserted by the caller, not
/// verified.
Verdict eulerian_criterion(const SimplicialComplex& complex, bool planar_asserted);

struct SocleBoundCheck {
    int socle_degree = 0;
    int clique_number = 0;
    bool clique_bound_ok = false; // socle degree <= clique number
    bool soc3_applicable = false; // degree-1 WLP holds and dim A_2 <= dim A_1
    bool soc3_ok = true;          // socle degree <= 3 when applicable

    bool ok() const { return clique_bound_ok && soc3_ok; }
};

SocleBoundCheck socle_clique_bound_check(const SimplicialComplex& complex,
                                         int clique_bound = 64);

struct AgreementReport {
    std::string complex_summary;
    int degrees_checked = 0;
    std::vector<std::string> disagreements;

    bool ok() const { return disagreements.empty(); }
};

/// Runs the exact-rank verdict for every degree plus every applicable
/// combinatorial criterion and records any disagreement. The theorems are
/// unconditional in characteristic 0, so any entry here is a defect.
AgreementReport cross_validate(const SimplicialComplex& complex);

} // namespace wlp

#endif

#include "wlp/idealization.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "wlp/rank.hpp"

namespace wlp {

IdealizedAlgebra::IdealizedAlgebra(AlgebraModel base) : base_(std::move(base)) {
    if (!base_.complex().is_pure())
        throw std::invalid_argument("IdealizedAlgebra: base algebra is not level");
    d_ = base_.socle_degree();
    if (d_ < 1) throw std::invalid_argument("IdealizedAlgebra: socle degree must be >= 1");
}

long IdealizedAlgebra::dim(int i) const {
    if (i < 0 || i > d_ + 1) return 0;
    return base_.dim(i) + base_.dim(d_ + 1 - i);
}

std::vector<long> IdealizedAlgebra::hilbert_function() const {
    std::vector<long> h;
    for (int i = 0; i <= d_ + 1; ++i) h.push_back(dim(i));
    return h;
}

TildeLinearForm IdealizedAlgebra::all_ones_form() const {
    TildeLinearForm l;
    l.x_coeffs.assign(static_cast<std::size_t>(base_.variable_count()), 1);
    l.y_coeffs.assign(base_.complex().facets().size(), 1);
    return l;
}

IntMatrix IdealizedAlgebra::multiplication_matrix(int i, const TildeLinearForm& l) const {
    if (i < 0 || i > d_)
        throw std::out_of_range("IdealizedAlgebra::multiplication_matrix: degree out of range");
    if (static_cast<int>(l.x_coeffs.size()) != base_.variable_count() ||
        l.y_coeffs.size() != base_.complex().facets().size())
        throw std::invalid_argument("IdealizedAlgebra::multiplication_matrix: bad form size");
    const bool x_part_zero =
        std::all_of(l.x_coeffs.begin(), l.x_coeffs.end(), [](long c) { return c == 0; });
    const bool y_part_zero =
        std::all_of(l.y_coeffs.begin(), l.y_coeffs.end(), [](long c) { return c == 0; });
    if (x_part_zero && y_part_zero)
        throw std::invalid_argument("IdealizedAlgebra::multiplication_matrix: zero form");

    // domain: (i-1)-faces then dual of R_{d+1-i} indexed by (d-i)-faces
    // codomain: (i)-faces then dual of R_{d-i} indexed by (d-i-1)-faces
    const std::vector<Face>& dom_x = base_.basis(i);
    const std::vector<Face>& dom_y = base_.complex().faces_of_dim(d_ - i);
    const std::vector<Face>& cod_x = base_.basis(i + 1);
    const std::vector<Face>& cod_y = base_.complex().faces_of_dim(d_ - i - 1);

    const int rows = static_cast<int>(cod_x.size() + cod_y.size());
    const int cols = static_cast<int>(dom_x.size() + dom_y.size());
    IntMatrix m(rows, cols);

    if (!x_part_zero) {
        const LinearForm lx(l.x_coeffs);

        // (R -> R) block: base multiplication by the x-part
        IntMatrix rr = base_.multiplication_matrix(i, lx);
        for (int r = 0; r < rr.rows(); ++r)
            for (int c = 0; c < rr.cols(); ++c)
                m.at(r, c) = rr.at(r, c);

        // (dual -> dual) block: transpose of base multiplication in the
        // complementary degree
        IntMatrix ww = base_.multiplication_matrix(d_ - i, lx);
        for (int r = 0; r < ww.cols(); ++r)
            for (int c = 0; c < ww.rows(); ++c)
                m.at(static_cast<int>(cod_x.size()) + r, static_cast<int>(dom_x.size()) + c) =
                    ww.at(c, r);
    }

    // (R -> dual) block: pairing against the facet coefficients of the y-part
    std::map<Face, std::size_t> facet_index;
    {
        const auto& facets = base_.complex().facets();
        for (std::size_t k = 0; k < facets.size(); ++k) facet_index.emplace(facets[k], k);
    }
    for (std::size_t c = 0; c < dom_x.size(); ++c) {
        const Face& a = dom_x[c];
        for (std::size_t r = 0; r < cod_y.size(); ++r) {
            const Face& s = cod_y[r];
            // (a . l_y)(x_s) = l_y coefficient on the union, when disjoint
            std::vector<int> merged;
            std::merge(a.vertices().begin(), a.vertices().end(), s.vertices().begin(),
                       s.vertices().end(), std::back_inserter(merged));
            if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
                continue; // shared vertex
            auto it = facet_index.find(Face(std::move(merged)));
            if (it == facet_index.end()) continue; // union is not a face
            m.at(static_cast<int>(cod_x.size() + r), static_cast<int>(c)) =
                l.y_coeffs[it->second];
        }
    }

    // (dual -> R) block stays zero: products of dual elements vanish
    return m;
}

TildeDegreeResult wlp_tilde_degree(const IdealizedAlgebra& alg, int i, int trials,
                                   std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("wlp_tilde_degree: trials must be >= 1");
    const int d = alg.base_socle_degree();
    if (i < 0 || i > d)
        throw std::out_of_range("wlp_tilde_degree: degree out of range");

    TildeDegreeResult result;
    result.degree = i;
    result.dim_from = alg.dim(i);
    result.dim_to = alg.dim(i + 1);
    result.trials = trials;
    result.seed = seed;

    const int n = alg.base().variable_count();
    const std::size_t facet_count = alg.base().complex().facets().size();
    std::mt19937_64 master(seed);
    std::vector<std::uint64_t> trial_seeds;
    for (int t = 0; t < trials; ++t) trial_seeds.push_back(master());

    const long min_dim = std::min(result.dim_from, result.dim_to);
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(trial_seeds[static_cast<std::size_t>(t)]);
        std::uniform_int_distribution<long> dist(1, 1L << 20);
        TildeLinearForm l;
        for (int v = 0; v < n; ++v) l.x_coeffs.push_back(dist(rng));
        for (std::size_t f = 0; f < facet_count; ++f) l.y_coeffs.push_back(dist(rng));
        RankResult r = rank(alg.multiplication_matrix(i, l));
        result.max_rank = std::max(result.max_rank, static_cast<long>(r.rank));
        if (result.max_rank == min_dim) break; // cannot do better
    }
    result.holds = result.max_rank == min_dim;

    if (!result.holds && d >= 2 && i == d - 1) {
        // Theorem upgrade: if the base fails surjectivity at d-1 (the all-ones
        // form realizes the generic rank for a monomial quotient) and
        // dim(d-1) >= dim(d) up top, no linear form can be surjective.
        IntMatrix base_map = alg.base().multiplication_matrix(
            d - 1, LinearForm::all_ones(alg.base().variable_count()));
        bool base_fails_surjectivity =
            rank(base_map).rank < alg.base().dim(d);
        bool dims_do_not_grow = result.dim_from >= result.dim_to;
        if (base_fails_surjectivity && dims_do_not_grow)
            result.confidence = TildeDegreeResult::Confidence::DeterministicByTheorem;
    }
    return result;
}

CorgorResult corgor_check(const SimplicialComplex& complex, int trials, std::uint64_t seed) {
    CorgorResult result;
    PseudomanifoldStatus status = complex.pseudomanifold_status();
    if (status.kind != PseudomanifoldStatus::Kind::WithoutBoundary) {
        result.reason = status.is_pseudomanifold() ? "pseudomanifold has boundary"
                                                   : "not a pseudomanifold (" + status.reason + ")";
        return result;
    }
    const int d = complex.dim() + 1;
    if (d < 2) {
        result.reason = "socle degree below 2";
        return result;
    }
    BipartiteCheck dual = is_bipartite(complex.dual_graph());
    if (!dual.bipartite) {
        result.reason = "dual graph is not bipartite";
        return result;
    }

    result.applicable = true;
    result.gorenstein_socle_degree = d + 1;
    IdealizedAlgebra alg{AlgebraModel{complex}};
    result.hilbert = alg.hilbert_function();
    result.degree_check = wlp_tilde_degree(alg, d - 1, trials, seed);

    // the corollary's dimension inequality, from ridge/facet counts
    FVector f = complex.f_vector();
    bool skeleton_edge_bound = f[1] >= f[0];
    bool ridge_facet_balance = 2 * f[d - 2] == static_cast<long>(d) * f[d - 1];
    result.inequality_ok = skeleton_edge_bound && ridge_facet_balance &&
                           f[1] + f[d - 2] >= f[0] + f[d - 1];
    return result;
}

} // namespace wlp

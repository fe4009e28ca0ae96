#ifndef WLP_IDEALIZATION_HPP
#define WLP_IDEALIZATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wlp/algebra_model.hpp"
#include "wlp/int_matrix.hpp"

namespace wlp {

/// Linear form in the idealized algebra: coefficients on the x variables plus
/// coefficients on the canonical-module generators, one per facet.
struct TildeLinearForm {
    std::vector<long> x_coeffs;
    std::vector<long> y_coeffs;
};

/*
 * Graded model of the Nagata idealization of a level base algebra R with its
 * canonical module shifted so the result is Gorenstein with socle degree
 * d + 1 (d = socle degree of R). The canonical module is realized as the
 * graded dual of R, so degree i splits as R_i + dual(R_{d+1-i}) and the
 * multiplication is (a, f)(b, g) = (ab, a.g + b.f) with the dual action
 * (r.f)(s) = f(rs). No presentation is computed; the model is the graded
 * vector space plus its multiplication maps.
 */
class IdealizedAlgebra {
public:
    /// Requires a level base (pure complex) with socle degree >= 1.
    explicit IdealizedAlgebra(AlgebraModel base);

    const AlgebraModel& base() const { return base_; }
    int base_socle_degree() const { return d_; }
    int socle_degree() const { return d_ + 1; }

    /// dim R_i + dim R_{d+1-i}; zero outside [0, d+1].
    long dim(int i) const;
    std::vector<long> hilbert_function() const;

    /// Matrix of multiplication by l from degree i to i+1 (0 <= i <= d).
    /// Block structure over (x-part, dual-part) bases:
    ///   [ M_i(l_x)         0            ]
    ///   [ P_i(l_y)   M_{d-i}(l_x)^T     ]
    /// where P_i pairs a monomial with the facet coefficients of l_y and the
    /// zero block reflects that products of dual elements vanish.
    IntMatrix multiplication_matrix(int i, const TildeLinearForm& l) const;

    TildeLinearForm all_ones_form() const;

private:
    AlgebraModel base_;
    int d_ = 0;
};

struct TildeDegreeResult {
    int degree = 0;
    long dim_from = 0;
    long dim_to = 0;
    long max_rank = 0; // best rank over all sampled forms
    bool holds = false;
    /// A rank decision at random forms is generically correct; a failure at
    /// degree d-1 is upgraded when the idealization theorem applies.
    enum class Confidence { Probabilistic, DeterministicByTheorem } confidence =
        Confidence::Probabilistic;
    int trials = 0;
    std::uint64_t seed = 0;
};

/// Samples `trials` random forms (coefficients uniform in [1, 2^20], seeded)
/// and reports the best rank of the degree-i multiplication map.
TildeDegreeResult wlp_tilde_degree(const IdealizedAlgebra& alg, int i, int trials,
                                   std::uint64_t seed);

struct CorgorResult {
    bool applicable = false;
    std::string reason; // when inapplicable
    int gorenstein_socle_degree = 0; // d + 1
    std::vector<long> hilbert;
    TildeDegreeResult degree_check;
    /// dim R_2 + dim R_{d-1} >= dim R_1 + dim R_d, re-derived from
    /// f_1 >= f_0 and 2 f_{d-2} = d f_{d-1}
    bool inequality_ok = false;
};

/// For a (d-1)-dimensional pseudomanifold without boundary whose dual graph
/// is bipartite, builds the idealization and confirms that WLP fails in
/// degree d-1. Inapplicable inputs are reported, not errors.
CorgorResult corgor_check(const SimplicialComplex& complex, int trials = 3,
                          std::uint64_t seed = 12345);

} // namespace wlp

#endif

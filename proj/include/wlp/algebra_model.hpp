#ifndef WLP_ALGEBRA_MODEL_HPP
#define WLP_ALGEBRA_MODEL_HPP

#include <string>
#include <vector>

#include "wlp/int_matrix.hpp"
#include "wlp/simplicial_complex.hpp"

namespace wlp {

/// Coefficients of a linear form, one per variable x_1..x_n.
class LinearForm {
public:
    explicit LinearForm(std::vector<long> coefficients);
    static LinearForm all_ones(int n);

    long coefficient(int vertex) const { return coeffs_[static_cast<std::size_t>(vertex - 1)]; }
    int variable_count() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<long>& coefficients() const { return coeffs_; }

private:
    std::vector<long> coeffs_;
};

struct SocleInfo {
    int degree = 0;
    /// Monomials annihilated by the maximal ideal = the facets, any dimension.
    std::vector<Face> monomials;
    /// true iff the socle sits in top degree only (the complex is pure)
    bool level = false;
};

/*
 * Graded model of the Artinian monomial algebra attached to a complex: the
 * quotient of the polynomial ring by the squares of all variables and the
 * monomials of the non-faces. Degree-i monomials correspond to (i-1)-faces,
 * so the graded basis in degree i is the lexicographic list of (i-1)-faces
 * and the Hilbert function is the shifted f-vector.
 */
class AlgebraModel {
public:
    explicit AlgebraModel(SimplicialComplex complex);

    const SimplicialComplex& complex() const { return complex_; }
    int variable_count() const { return complex_.vertex_count(); }

    /// dim of the degree-i graded piece (= f_{i-1}); 0 outside [0, socle_degree()].
    long dim(int i) const;

    /// Monomial basis of the degree-i piece as (i-1)-faces, lex order.
    const std::vector<Face>& basis(int i) const;

    /// Top nonzero degree: dim(complex) + 1.
    int socle_degree() const { return complex_.dim() + 1; }

    SocleInfo socle() const;

    /// Matrix of multiplication by `ell` from degree i to degree i+1, in the
    /// lex-ordered monomial bases. Rows are (i)-faces, columns (i-1)-faces;
    /// the entry is ell's coefficient on the unique added vertex.
    IntMatrix multiplication_matrix(int i, const LinearForm& ell) const;

    std::string hilbert_series_string() const;

private:
    SimplicialComplex complex_;
};

} // namespace wlp

#endif

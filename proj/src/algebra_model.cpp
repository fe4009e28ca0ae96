#include "wlp/algebra_model.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wlp {

LinearForm::LinearForm(std::vector<long> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("LinearForm: no coefficients");
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](long c) { return c == 0; }))
        throw std::invalid_argument("LinearForm: all coefficients are zero");
}

LinearForm LinearForm::all_ones(int n) {
    return LinearForm(std::vector<long>(static_cast<std::size_t>(n), 1));
}

AlgebraModel::AlgebraModel(SimplicialComplex complex) : complex_(std::move(complex)) {
    if (complex_.facet_count() == 0)
        throw std::invalid_argument("AlgebraModel: complex has no facets");
}

long AlgebraModel::dim(int i) const {
    if (i < 0 || i > socle_degree()) return 0;
    return static_cast<long>(complex_.faces_of_dim(i - 1).size());
}

const std::vector<Face>& AlgebraModel::basis(int i) const {
    return complex_.faces_of_dim(i - 1);
}

SocleInfo AlgebraModel::socle() const {
    SocleInfo info;
    info.degree = socle_degree();
    info.monomials = complex_.facets();
    info.level = complex_.is_pure();
    return info;
}

IntMatrix AlgebraModel::multiplication_matrix(int i, const LinearForm& ell) const {
    if (i < 0 || i > socle_degree())
        throw std::out_of_range("multiplication_matrix: degree out of range");
    if (ell.variable_count() != variable_count())
        throw std::invalid_argument("multiplication_matrix: wrong number of coefficients");

    const std::vector<Face>& domain = basis(i);
    const std::vector<Face>& codomain = basis(i + 1);
    std::map<Face, int> row_of;
    for (std::size_t r = 0; r < codomain.size(); ++r)
        row_of.emplace(codomain[r], static_cast<int>(r));

    IntMatrix m(static_cast<int>(codomain.size()), static_cast<int>(domain.size()));
    for (std::size_t col = 0; col < domain.size(); ++col) {
        const Face& f = domain[col];
        for (int v = 1; v <= variable_count(); ++v) {
            if (f.contains(v)) continue; // x_v^2 = 0
            Face g = f.with_vertex(v);
            auto it = row_of.find(g);
            if (it == row_of.end()) continue; // not a face
            m.at(it->second, static_cast<int>(col)) += ell.coefficient(v);
        }
    }
    return m;
}

std::string AlgebraModel::hilbert_series_string() const {
    std::ostringstream os;
    for (int i = 0; i <= socle_degree(); ++i) {
        long d = dim(i);
        if (d == 0) continue;
        if (i > 0) os << " + ";
        if (i == 0) {
            os << d;
            continue;
        }
        if (d != 1) os << d;
        os << 't';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

} // namespace wlp

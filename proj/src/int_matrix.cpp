#include "wlp/int_matrix.hpp"

#include <sstream>

namespace wlp {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::multiply(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("IntMatrix::multiply: dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::take_rows(const std::vector<int>& row_indices) const {
    IntMatrix out(static_cast<int>(row_indices.size()), cols_);
    for (std::size_t i = 0; i < row_indices.size(); ++i) {
        int r = row_indices[i];
        if (r < 0 || r >= rows_)
            throw std::out_of_range("IntMatrix::take_rows: row index out of range");
        for (int j = 0; j < cols_; ++j)
            out.at(static_cast<int>(i), j) = at(r, j);
    }
    return out;
}

bool IntMatrix::is_zero() const {
    for (const auto& e : data_)
        if (e != 0) return false;
    return true;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

} // namespace wlp

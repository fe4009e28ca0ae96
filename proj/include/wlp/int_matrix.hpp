#ifndef WLP_INT_MATRIX_HPP
#define WLP_INT_MATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wlp {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(checked_size(rows, cols)) {}

    IntMatrix(int rows, int cols, std::vector<mpz_class> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != checked_size(rows, cols))
            throw std::invalid_argument("IntMatrix: entry count != rows*cols");
    }

    /// Convenience constructor from row-major machine integers.
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& at(int r, int c) { return data_[index(r, c)]; }
    const mpz_class& at(int r, int c) const { return data_[index(r, c)]; }

    const std::vector<mpz_class>& entries() const { return data_; }

    bool operator==(const IntMatrix& other) const = default;

    IntMatrix transpose() const;
    IntMatrix multiply(const IntMatrix& rhs) const;

    /// Matrix made of the given rows of this matrix, in the given order.
    IntMatrix take_rows(const std::vector<int>& row_indices) const;

    bool is_zero() const;

    std::string to_string() const;

private:
    static std::size_t checked_size(int rows, int cols) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("IntMatrix: negative dimension");
        return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    }

    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpz_class> data_;
};

} // namespace wlp

#endif

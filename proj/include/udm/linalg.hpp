#ifndef UDM_LINALG_HPP
#define UDM_LINALG_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "udm/gf.hpp"

namespace udm {

using Vector = std::vector<Element>;

/// Dense row-major matrix over a finite field. Row and column indices start
/// at zero.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Throws DomainError on ragged input or out-of-field values.
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows,
                            std::size_t cols);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    void set_row(std::size_t r, std::span<const Element> values);

    Matrix transpose() const;
    /// Leading `count` rows.
    Matrix top_rows(std::size_t count) const;
    Matrix without_row_col(std::size_t row, std::size_t col) const;

    bool is_lower_triangular() const;
    bool is_upper_triangular() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

/// Rows of space-separated element values, one row per line.
std::string to_string(const Matrix& m);

/// First N rows of I_K and of J_K (the row-reversed identity).
Matrix identity_nk(const FieldPtr& field, std::size_t N, std::size_t K);
Matrix reversal_nk(const FieldPtr& field, std::size_t N, std::size_t K);
inline Matrix identity(const FieldPtr& field, std::size_t K) { return identity_nk(field, K, K); }

Matrix multiply(const Matrix& a, const Matrix& b);
Vector multiply(const Matrix& a, std::span<const Element> x);

std::size_t rank(const Matrix& m);

/// Solves A x = y for A with full column rank. Of an over-determined system
/// the first `cols` linearly independent rows are kept; a violated dropped
/// row raises InconsistentError.
Vector solve(const Matrix& a, std::span<const Element> y);

Matrix inverse(const Matrix& a);

/// Basis of {b : b^T A = 0}, derived from the reduced echelon form of A^T.
std::vector<Vector> left_null_space(const Matrix& a);

Matrix kronecker(const Matrix& a, const Matrix& b);

/// Stacks the leading `count` rows of each block in order.
Matrix stack_rows(const std::vector<std::pair<const Matrix*, std::size_t>>& blocks);

}  // namespace udm

#endif  // UDM_LINALG_HPP

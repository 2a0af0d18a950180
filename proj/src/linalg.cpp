#include "udm/linalg.hpp"

#include <sstream>

#include "udm/error.hpp"

namespace udm {

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows,
                         std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw DomainError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                              " entries, expected " + std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = field->element(rows[r][c]);
    }
    return m;
}

void Matrix::set_row(std::size_t r, std::span<const Element> values) {
    if (values.size() != cols_) throw DomainError("row length mismatch");
    std::copy(values.begin(), values.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::top_rows(std::size_t count) const {
    if (count > rows_) throw DomainError("requested more rows than the matrix has");
    Matrix t(field_, count, cols_);
    std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(count * cols_), t.data_.begin());
    return t;
}

Matrix Matrix::without_row_col(std::size_t row, std::size_t col) const {
    Matrix t(field_, rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, tr = 0; r < rows_; ++r) {
        if (r == row) continue;
        for (std::size_t c = 0, tc = 0; c < cols_; ++c) {
            if (c == col) continue;
            t(tr, tc++) = (*this)(r, c);
        }
        ++tr;
    }
    return t;
}

bool Matrix::is_lower_triangular() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (!(*this)(r, c).is_zero()) return false;
    return true;
}

bool Matrix::is_upper_triangular() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < std::min(r, cols_); ++c)
            if (!(*this)(r, c).is_zero()) return false;
    return true;
}

std::string to_string(const Matrix& m) {
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c).value;
        out << '\n';
    }
    return out.str();
}

Matrix identity_nk(const FieldPtr& field, std::size_t N, std::size_t K) {
    if (N > K) throw DomainError("I_{N,K} needs N <= K");
    Matrix m(field, N, K);
    for (std::size_t n = 0; n < N; ++n) m(n, n) = field->one();
    return m;
}

Matrix reversal_nk(const FieldPtr& field, std::size_t N, std::size_t K) {
    if (N > K) throw DomainError("J_{N,K} needs N <= K");
    Matrix m(field, N, K);
    for (std::size_t n = 0; n < N; ++n) m(n, K - 1 - n) = field->one();
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DomainError("matrix product dimension mismatch");
    const Field& F = *a.field();
    Matrix r(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Element x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = F.add(r(i, j), F.mul(x, b(k, j)));
        }
    }
    return r;
}

Vector multiply(const Matrix& a, std::span<const Element> x) {
    if (a.cols() != x.size()) throw DomainError("matrix-vector dimension mismatch");
    const Field& F = *a.field();
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Element acc{};
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (!a(i, k).is_zero() && !x[k].is_zero()) acc = F.add(acc, F.mul(a(i, k), x[k]));
        }
        y[i] = acc;
    }
    return y;
}

namespace {

// In-place reduction to (reduced, if `reduce_above`) row echelon form over the
// first `pivot_cols` columns. Pivots are the first non-zero entry scanning
// down. Returns the pivot column of each pivot row.
std::vector<std::size_t> eliminate(Matrix& m, std::size_t pivot_cols, bool reduce_above) {
    const Field& F = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        }
        const Element inv = F.inv(m(row, col));
        m(row, col) = F.one();
        // Dense updates: no zero skipping, so the work depends only on the shape.
        for (std::size_t c = col + 1; c < m.cols(); ++c) m(row, c) = F.mul(m(row, c), inv);
        for (std::size_t r = reduce_above ? 0 : row + 1; r < m.rows(); ++r) {
            if (r == row) continue;
            const Element factor = m(r, col);
            m(r, col) = Element{};
            for (std::size_t c = col + 1; c < m.cols(); ++c) m(r, c) = F.sub(m(r, c), F.mul(factor, m(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Matrix augment(const Matrix& a, std::span<const Element> y) {
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = y[r];
    }
    return aug;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    Matrix work = m;
    return eliminate(work, work.cols(), false).size();
}

Vector solve(const Matrix& a, std::span<const Element> y) {
    if (y.size() != a.rows()) throw DomainError("right-hand side length mismatch");
    const std::size_t K = a.cols();
    if (a.rows() < K) throw SingularError("under-determined system");

    std::vector<std::size_t> kept;
    if (a.rows() == K) {
        for (std::size_t r = 0; r < K; ++r) kept.push_back(r);
    } else {
        // Keep the first K independent rows, in order.
        Matrix basis(a.field(), 0, K);
        for (std::size_t r = 0; r < a.rows() && kept.size() < K; ++r) {
            Matrix trial(a.field(), basis.rows() + 1, K);
            for (std::size_t i = 0; i < basis.rows(); ++i) trial.set_row(i, basis.row(i));
            trial.set_row(basis.rows(), a.row(r));
            if (rank(trial) == trial.rows()) {
                basis = std::move(trial);
                kept.push_back(r);
            }
        }
        if (kept.size() < K) throw SingularError("system matrix is rank deficient");
    }

    Matrix square(a.field(), K, K);
    Vector rhs(K);
    for (std::size_t i = 0; i < K; ++i) {
        square.set_row(i, a.row(kept[i]));
        rhs[i] = y[kept[i]];
    }
    Matrix aug = augment(square, rhs);
    if (eliminate(aug, K, true).size() < K) throw SingularError("system matrix is singular");
    Vector x(K);
    for (std::size_t i = 0; i < K; ++i) x[i] = aug(i, K);

    if (a.rows() > K) {
        const Vector check = multiply(a, x);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (check[r] != y[r]) {
                throw InconsistentError("equation " + std::to_string(r) + " is violated");
            }
        }
    }
    return x;
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw DomainError("inverse of a non-square matrix");
    const std::size_t K = a.rows();
    const Field& F = *a.field();
    Matrix aug(a.field(), K, 2 * K);
    for (std::size_t r = 0; r < K; ++r) {
        for (std::size_t c = 0; c < K; ++c) aug(r, c) = a(r, c);
        aug(r, K + r) = F.one();
    }
    if (eliminate(aug, K, true).size() < K) throw SingularError("matrix is not invertible");
    Matrix inv(a.field(), K, K);
    for (std::size_t r = 0; r < K; ++r)
        for (std::size_t c = 0; c < K; ++c) inv(r, c) = aug(r, K + c);
    return inv;
}

std::vector<Vector> left_null_space(const Matrix& a) {
    const Field& F = *a.field();
    Matrix t = a.transpose();  // b^T A = 0  <=>  A^T b = 0
    const auto pivots = eliminate(t, t.cols(), true);
    std::vector<bool> is_pivot(t.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < t.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector b(t.cols());
        b[free] = F.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) b[pivots[i]] = F.neg(t(i, free));
        basis.push_back(std::move(b));
    }
    return basis;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    if (!(*a.field() == *b.field())) throw DomainError("Kronecker product across different fields");
    const Field& F = *a.field();
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const Element x = a(i1, j1);
            if (x.is_zero()) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    r(i1 * b.rows() + i2, j1 * b.cols() + j2) = F.mul(x, b(i2, j2));
        }
    return r;
}

Matrix stack_rows(const std::vector<std::pair<const Matrix*, std::size_t>>& blocks) {
    if (blocks.empty()) throw DomainError("stack_rows needs at least one block");
    const std::size_t cols = blocks.front().first->cols();
    std::size_t total = 0;
    for (const auto& [m, count] : blocks) {
        if (m->cols() != cols) throw DomainError("stacked blocks differ in column count");
        if (count > m->rows()) {
            throw DomainError("row count " + std::to_string(count) + " exceeds block height " +
                              std::to_string(m->rows()));
        }
        total += count;
    }
    Matrix out(blocks.front().first->field(), total, cols);
    std::size_t r = 0;
    for (const auto& [m, count] : blocks)
        for (std::size_t i = 0; i < count; ++i) out.set_row(r++, m->row(i));
    return out;
}

}  // namespace udm

#include "udm/transforms.hpp"

#include <algorithm>

#include "udm/error.hpp"

namespace udm {

Family row_transform(const Family& family, std::size_t l, const Matrix& C) {
    if (l >= family.L()) throw DomainError("matrix index " + std::to_string(l) + " out of range");
    if (C.rows() != family.N() || C.cols() != family.N()) {
        throw DomainError("row transform must be " + std::to_string(family.N()) + "x" +
                          std::to_string(family.N()));
    }
    if (!C.is_lower_triangular()) throw DomainError("row transform is not lower triangular");
    for (std::size_t i = 0; i < C.rows(); ++i) {
        if (C(i, i).is_zero()) throw DomainError("row transform has a zero on its diagonal");
    }
    std::vector<Matrix> ms = family.matrices();
    ms[l] = multiply(C, ms[l]);
    return family.with_matrices(std::move(ms), family.N(), family.K());
}

Family col_transform(const Family& family, const Matrix& B) {
    if (B.rows() != family.K() || B.cols() != family.K()) {
        throw DomainError("column transform must be " + std::to_string(family.K()) + "x" +
                          std::to_string(family.K()));
    }
    if (rank(B) != family.K()) throw DomainError("column transform is singular");
    std::vector<Matrix> ms;
    for (const auto& a : family.matrices()) ms.push_back(multiply(a, B));
    return family.with_matrices(std::move(ms), family.N(), family.K());
}

Family permute(const Family& family, const std::vector<std::size_t>& sigma) {
    const std::size_t L = family.L();
    if (sigma.size() != L) throw DomainError("permutation length differs from L");
    std::vector<bool> seen(L, false);
    for (auto s : sigma) {
        if (s >= L || seen[s]) throw DomainError("not a permutation of [L]");
        seen[s] = true;
    }
    std::vector<Matrix> ms;
    for (auto s : sigma) ms.push_back(family.matrix(s));
    return family.with_matrices(std::move(ms), family.N(), family.K());
}

Family tensor_power(const Family& family, std::size_t m) {
    if (m < 1) throw DomainError("tensor power must be at least 1");
    std::vector<Matrix> ms;
    std::size_t N = family.N(), K = family.K();
    for (std::size_t i = 1; i < m; ++i) {
        N *= family.N();
        K *= family.K();
    }
    for (const auto& a : family.matrices()) {
        Matrix r = a;
        for (std::size_t i = 1; i < m; ++i) r = kronecker(r, a);
        ms.push_back(std::move(r));
    }
    return family.with_matrices(std::move(ms), N, K);
}

bool rows_mirrored(const Matrix& a, const Matrix& b, std::size_t N, std::size_t K) {
    for (std::size_t n = K >= N ? K - N : 0; n < N; ++n) {
        const auto x = a.row(n), y = b.row(K - 1 - n);
        if (!std::equal(x.begin(), x.end(), y.begin())) return false;
    }
    return true;
}

namespace {

void mirror_pair(Matrix& a0, Matrix& a1, std::size_t N, std::size_t K, std::size_t first_index) {
    if (K >= 2 * N) return;  // no row has to coincide
    const Field& F = *a0.field();
    for (std::size_t n = K - N; n < N; ++n) {
        {
            const auto x = a0.row(n), y = a1.row(K - 1 - n);
            if (std::equal(x.begin(), x.end(), y.begin())) continue;
        }
        const Matrix b0 = a0.top_rows(n + 1);
        const Matrix b1 = a1.top_rows(K - n);
        const Matrix stacked = stack_rows({{&b0, n + 1}, {&b1, K - n}});
        const auto null = left_null_space(stacked);
        const std::string where = "pair (" + std::to_string(first_index) + "," +
                                  std::to_string(first_index + 1) + "), row " + std::to_string(n);
        if (null.size() != 1) {
            throw TransformError(where + ": left null space has dimension " + std::to_string(null.size()) +
                                 ", expected 1; the input is not a UDM family");
        }
        Vector b = null.front();
        if (b[n].is_zero() || b[K].is_zero()) {
            throw TransformError(where + ": null vector has a zero end component; the input is not a UDM family");
        }
        const Element scale = F.inv(b[K]);
        for (auto& x : b) x = F.mul(x, scale);

        Vector r0(K), r1(K);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t c = 0; c < K; ++c) r0[c] = F.add(r0[c], F.mul(b[i], b0(i, c)));
        for (std::size_t i = 0; i < K - n; ++i)
            for (std::size_t c = 0; c < K; ++c) r1[c] = F.sub(r1[c], F.mul(b[n + 1 + i], b1(i, c)));
        a0.set_row(n, r0);
        a1.set_row(K - 1 - n, r1);
    }
}

}  // namespace

Family pair_reversal(const Family& family) {
    std::vector<Matrix> ms = family.matrices();
    for (std::size_t i = 0; i + 1 < ms.size(); i += 2) {
        mirror_pair(ms[i], ms[i + 1], family.N(), family.K(), i);
    }
    return family.with_matrices(std::move(ms), family.N(), family.K());
}

Family normalize_leading_pair(const Family& family) {
    const std::size_t N = family.N(), K = family.K();
    const FieldPtr& field = family.field();
    std::vector<Matrix> ms = family.matrices();
    if (ms.size() >= 2) mirror_pair(ms[0], ms[1], N, K, 0);

    // Rows of B taken from A_0 and A_1; the rest is completed greedily.
    std::vector<std::optional<Vector>> rows(K);
    for (std::size_t n = 0; n < N; ++n) rows[n] = Vector(ms[0].row(n).begin(), ms[0].row(n).end());
    if (ms.size() >= 2) {
        const std::size_t count = K >= 2 * N ? N : K - N;
        for (std::size_t n = 0; n < count; ++n) {
            rows[K - 1 - n] = Vector(ms[1].row(n).begin(), ms[1].row(n).end());
        }
    }
    Matrix specified(field, 0, K);
    auto append = [&](const Matrix& m, const Vector& r) {
        Matrix out(field, m.rows() + 1, K);
        for (std::size_t i = 0; i < m.rows(); ++i) out.set_row(i, m.row(i));
        out.set_row(m.rows(), r);
        return out;
    };
    for (const auto& r : rows) {
        if (r) specified = append(specified, *r);
    }
    if (rank(specified) != specified.rows()) {
        throw TransformError("rows of A_0 and A_1 are linearly dependent; the input is not a UDM family");
    }
    Matrix current = specified;
    std::vector<Vector> fill;
    const std::size_t missing = K - specified.rows();
    for (std::size_t j = 0; j < K && fill.size() < missing; ++j) {
        Vector e(K);
        e[j] = field->one();
        Matrix trial = append(current, e);
        if (rank(trial) == trial.rows()) {
            current = std::move(trial);
            fill.push_back(std::move(e));
        }
    }
    Matrix B(field, K, K);
    for (std::size_t r = 0, f = 0; r < K; ++r) B.set_row(r, rows[r] ? *rows[r] : fill[f++]);

    Matrix B_inv = [&] {
        try {
            return inverse(B);
        } catch (const SingularError&) {
            throw TransformError("assembled column transform is singular; the input is not a UDM family");
        }
    }();
    for (auto& a : ms) a = multiply(a, B_inv);
    return family.with_matrices(std::move(ms), N, K);
}

Family reduce(const Family& family) {
    const std::size_t N = family.N(), K = family.K();
    if (N < 2) throw DomainError("reduce needs N ≥ 2");
    if (family.L() < 2) throw TransformError("reduce needs L ≥ 2");
    const Matrix& a1 = family.matrix(1);
    for (std::size_t k = 0; k < K; ++k) {
        const bool want_one = k == K - 1;
        if (a1(0, k) != (want_one ? family.field()->one() : Element{})) {
            throw TransformError("zeroth row of A_1 is not (0, ..., 0, 1); run normalize first");
        }
    }
    std::vector<Matrix> ms;
    for (std::size_t l = 0; l < family.L(); ++l) {
        ms.push_back(family.matrix(l).without_row_col(N - 1, l == 1 ? 0 : K - 1));
    }
    return family.with_matrices(std::move(ms), N - 1, K - 1);
}

}  // namespace udm

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "udm/family.hpp"
#include "udm/linalg.hpp"
#include "udm/poly.hpp"

namespace udm::test {

inline const std::vector<std::uint64_t> kSmallFields = {2, 3, 4, 5, 7, 8, 9};

inline Element random_element(const Field& f, std::mt19937_64& rng) {
    return Element{static_cast<std::uint32_t>(rng() % f.order())};
}

inline Element random_nonzero(const Field& f, std::mt19937_64& rng) {
    return Element{static_cast<std::uint32_t>(1 + rng() % (f.order() - 1))};
}

inline Poly random_poly(const FieldPtr& f, std::size_t max_degree, std::mt19937_64& rng) {
    const std::size_t len = rng() % (max_degree + 2);
    std::vector<Element> c(len);
    for (auto& e : c) e = random_element(*f, rng);
    return Poly(f, std::move(c));
}

inline Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_element(*f, rng);
    return m;
}

inline Matrix random_invertible(const FieldPtr& f, std::size_t k, std::mt19937_64& rng) {
    while (true) {
        Matrix m = random_matrix(f, k, k, rng);
        if (rank(m) == k) return m;
    }
}

// Lower-triangular with non-zero diagonal.
inline Matrix random_lower(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
    Matrix m(f, n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < r; ++c) m(r, c) = random_element(*f, rng);
        m(r, r) = random_nonzero(*f, rng);
    }
    return m;
}

// The four 3x3 matrices of the L = 4, N = K = 3, q = 3 example, as printed.
inline std::vector<std::vector<std::vector<std::uint32_t>>> example_433_rows() {
    return {
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
        {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}},
        {{1, 1, 1}, {0, 1, 2}, {0, 0, 1}},
        {{1, 2, 1}, {0, 1, 1}, {0, 0, 1}},
    };
}

inline Family example_433() {
    const FieldPtr f = Field::create(3);
    std::vector<Matrix> ms;
    for (const auto& rows : example_433_rows()) ms.push_back(Matrix::from_rows(f, rows, 3));
    return Family(f, 3, 3, std::move(ms), Provenance::loaded);
}

}  // namespace udm::test

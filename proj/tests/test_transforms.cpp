#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "udm/error.hpp"
#include "udm/transforms.hpp"

using namespace udm;
using namespace udm::test;

namespace {

// Random verified Pascal family with small dimensions.
Family random_pascal(std::mt19937_64& rng) {
    static const std::vector<std::uint64_t> qs = {2, 3, 4, 5, 7, 8, 9};
    const std::uint64_t q = qs[rng() % qs.size()];
    const std::size_t L = 2 + rng() % q;
    const std::size_t N = 1 + rng() % 4;
    const std::size_t K = N + rng() % (std::min<std::size_t>(L * N, 4 + N) - N + 1);
    return construct_pascal(L, N, std::min<std::size_t>(K, 6), q);
}

}  // namespace

TEST_CASE("row transform") {
    const Family ex = example_433();
    const auto f = ex.field();
    const Matrix c = Matrix::from_rows(f, {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    const Family t = row_transform(ex, 2, c);
    CHECK(t.matrix(2) == multiply(c, ex.matrix(2)));
    CHECK(verify(t).passed);
    CHECK(t.provenance() == Provenance::transformed);
    CHECK(row_transform(ex, 2, identity(f, 3)) == ex);
    CHECK_THROWS_AS(row_transform(ex, 2, Matrix::from_rows(f, {{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}, 3)), DomainError);
    CHECK_THROWS_AS(row_transform(ex, 2, Matrix::from_rows(f, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, 3)), DomainError);
    CHECK_THROWS_AS(row_transform(ex, 4, c), DomainError);
}

TEST_CASE("column transform") {
    const Family ex = example_433();
    const auto f = ex.field();
    CHECK(col_transform(ex, identity(f, 3)) == ex);
    const Family t = col_transform(ex, inverse(ex.matrix(2)));
    CHECK(t.matrix(2) == identity(f, 3));
    CHECK(verify(t).passed);
    std::mt19937_64 rng(31);
    CHECK(verify(col_transform(ex, random_invertible(f, 3, rng))).passed);
    CHECK_THROWS_AS(col_transform(ex, Matrix(f, 3, 3)), DomainError);
}

TEST_CASE("permutation") {
    const Family ex = example_433();
    CHECK(permute(ex, {0, 1, 2, 3}) == ex);
    const Family swapped = permute(ex, {0, 1, 3, 2});
    CHECK(swapped.matrix(2) == ex.matrix(3));
    CHECK(verify(swapped).passed);
    CHECK(verify(permute(ex, {3, 2, 1, 0})).passed);
    CHECK_THROWS_AS(permute(ex, {0, 0, 1, 2}), DomainError);
    CHECK_THROWS_AS(permute(ex, {0, 1, 2}), DomainError);
}

TEST_CASE("random transforms preserve the UDM property") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 150; ++t) {
        const Family fam = random_pascal(rng);
        const auto f = fam.field();
        CAPTURE(f->order());
        CAPTURE(fam.L());
        CAPTURE(fam.N());
        CAPTURE(fam.K());
        REQUIRE(verify(row_transform(fam, rng() % fam.L(), random_lower(f, fam.N(), rng))).passed);
        REQUIRE(verify(col_transform(fam, random_invertible(f, fam.K(), rng))).passed);
        std::vector<std::size_t> sigma(fam.L());
        std::iota(sigma.begin(), sigma.end(), 0);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        REQUIRE(verify(permute(fam, sigma)).passed);
    }
}

TEST_CASE("tensor powers of Pascal families over prime fields") {
    CHECK(tensor_power(construct_pascal(3, 2, 2, 2), 2) == construct_pascal(3, 4, 4, 2));
    CHECK(tensor_power(construct_pascal(3, 2, 2, 2), 3) == construct_pascal(3, 8, 8, 2));
    CHECK(tensor_power(example_433(), 1) == example_433());
    CHECK(tensor_power(construct_pascal(6, 5, 5, 5), 2) == construct_pascal(6, 25, 25, 5));
    const Family sq = tensor_power(example_433(), 2);
    CHECK(sq.N() == 9);
    CHECK(sq.K() == 9);
    CHECK(sq == construct_pascal(4, 9, 9, 3));
    CHECK_THROWS_AS(tensor_power(example_433(), 0), DomainError);
}

TEST_CASE("pair reversal") {
    // K >= 2N: nothing to do
    const Family wide = construct_pascal(4, 2, 4, 3);
    CHECK(pair_reversal(wide) == wide);
    // (I, J) already mirrored
    const Family ij = construct_pascal(2, 4, 4, 5);
    CHECK(pair_reversal(ij) == ij);

    const Family ex = example_433();
    CHECK_FALSE(rows_mirrored(ex.matrix(2), ex.matrix(3), 3, 3));
    const Family r = pair_reversal(ex);
    CHECK(rows_mirrored(r.matrix(0), r.matrix(1), 3, 3));
    CHECK(rows_mirrored(r.matrix(2), r.matrix(3), 3, 3));
    CHECK(verify(r).passed);
}

TEST_CASE("pair reversal on random families") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 100; ++t) {
        Family fam = random_pascal(rng);
        fam = col_transform(fam, random_invertible(fam.field(), fam.K(), rng));
        const Family r = pair_reversal(fam);
        for (std::size_t i = 0; i + 1 < r.L(); i += 2) REQUIRE(rows_mirrored(r.matrix(i), r.matrix(i + 1), r.N(), r.K()));
        if (r.L() % 2) REQUIRE(r.matrix(r.L() - 1) == fam.matrix(fam.L() - 1));
        REQUIRE(verify(r).passed);
    }
}

TEST_CASE("pair reversal reports degenerate input") {
    const auto f = Field::create(3);
    // two identical matrices: the mirror step cannot succeed
    const Family bad(f, 2, 2, {identity(f, 2), identity(f, 2)});
    CHECK_THROWS_AS(pair_reversal(bad), TransformError);
}

TEST_CASE("normalizing the leading pair") {
    const Family ex = example_433();
    CHECK(normalize_leading_pair(ex) == ex);
    const auto f2 = Field::create(2);
    const Family ij(f2, 5, 5, {identity(f2, 5), reversal_nk(f2, 5, 5)});
    CHECK(normalize_leading_pair(ij) == ij);

    std::mt19937_64 rng(34);
    const Family mixed = col_transform(ex, random_invertible(ex.field(), 3, rng));
    const Family n = normalize_leading_pair(mixed);
    CHECK(n.matrix(0) == identity(ex.field(), 3));
    CHECK(n.matrix(1) == reversal_nk(ex.field(), 3, 3));
    CHECK(verify(n).passed);
}

TEST_CASE("normalization on random families is correct and idempotent") {
    std::mt19937_64 rng(35);
    for (int t = 0; t < 100; ++t) {
        Family fam = random_pascal(rng);
        const auto f = fam.field();
        fam = col_transform(fam, random_invertible(f, fam.K(), rng));
        fam = row_transform(fam, 0, random_lower(f, fam.N(), rng));
        fam = row_transform(fam, 1, random_lower(f, fam.N(), rng));
        const Family n = normalize_leading_pair(fam);
        REQUIRE(n.matrix(0) == identity_nk(f, fam.N(), fam.K()));
        REQUIRE(n.matrix(1) == reversal_nk(f, fam.N(), fam.K()));
        REQUIRE(verify(n).passed);
        REQUIRE(normalize_leading_pair(n) == n);
    }
}

TEST_CASE("reduction") {
    CHECK(reduce(construct_pascal(4, 3, 3, 3)) == construct_pascal(4, 2, 2, 3));
    const Family r = reduce(construct_pascal(3, 2, 2, 2));
    CHECK(r.N() == 1);
    CHECK(r.K() == 1);
    CHECK(verify(r).passed);
    CHECK_THROWS_AS(reduce(construct_pascal(3, 1, 1, 2)), DomainError);
    const Family shuffled = permute(example_433(), {1, 0, 2, 3});
    CHECK_THROWS_AS(reduce(shuffled), TransformError);
    for (auto q : kSmallFields)
        for (std::size_t L = 2; L <= q + 1; ++L)
            for (std::size_t N = 2; N <= 5; ++N) REQUIRE(reduce(construct_pascal(L, N, N, q)) == construct_pascal(L, N - 1, N - 1, q));
}

TEST_CASE("reduce after normalize on a scrambled family") {
    std::mt19937_64 rng(36);
    for (int t = 0; t < 60; ++t) {
        Family fam = random_pascal(rng);
        if (fam.N() < 2) continue;
        fam = col_transform(fam, random_invertible(fam.field(), fam.K(), rng));
        const Family r = reduce(normalize_leading_pair(fam));
        REQUIRE(r.N() == fam.N() - 1);
        REQUIRE(r.K() == fam.K() - 1);
        REQUIRE(verify(r).passed);
    }
}

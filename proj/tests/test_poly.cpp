#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "udm/error.hpp"
#include "udm/poly.hpp"

using namespace udm;
using udm::test::random_element;
using udm::test::random_poly;

namespace {

Poly P(const FieldPtr& f, std::vector<std::uint32_t> c) {
    std::vector<Element> e;
    for (auto v : c) e.push_back(Element{v});
    return Poly(f, e);
}

// exact binomials for k <= 64
std::vector<std::vector<std::uint64_t>> exact_pascal(std::size_t max_k) {
    std::vector<std::vector<std::uint64_t>> t(max_k + 1);
    for (std::size_t k = 0; k <= max_k; ++k) {
        t[k].assign(k + 1, 1);
        for (std::size_t n = 1; n < k; ++n) t[k][n] = t[k - 1][n - 1] + t[k - 1][n];
    }
    return t;
}

// divide by (X - beta) while the remainder is zero
std::size_t multiplicity_by_division(Poly a, Element beta) {
    const Field& F = *a.field();
    std::size_t m = 0;
    while (true) {
        const auto& c = a.coeffs();
        std::vector<Element> q(c.size() - 1);
        Element carry{};
        for (std::size_t k = c.size(); k-- > 0;) {
            const Element v = F.add(c[k], F.mul(carry, beta));
            if (k == 0) {
                if (!v.is_zero()) return m;
            } else {
                q[k - 1] = v;
            }
            carry = v;
        }
        a = Poly(a.field(), q);
        ++m;
    }
}

}  // namespace

TEST_CASE("binomials mod p") {
    CHECK(binomial_mod_p(2, 1, 3) == 2);
    CHECK(binomial_mod_p(4, 2, 2) == 0);
    CHECK(binomial_mod_p(3, 5, 7) == 0);
    for (std::uint64_t k = 0; k < 50; ++k) CHECK(binomial_mod_p(k, k, 5) == 1);
}

TEST_CASE("Lucas agrees with exact binomials for k <= 64") {
    const auto exact = exact_pascal(64);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const BinomialTable table(p, 64);
        for (std::size_t k = 0; k <= 64; ++k)
            for (std::size_t n = 0; n <= k; ++n) {
                REQUIRE(binomial_mod_p(k, n, p) == exact[k][n] % p);
                REQUIRE(table(k, n) == exact[k][n] % p);
            }
    }
}

TEST_CASE("Hasse derivative examples") {
    const auto f2 = Field::create(2), f3 = Field::create(3);
    CHECK(hasse_derivative(P(f2, {0, 0, 0, 1}), 2) == P(f2, {0, 1}));
    CHECK(hasse_derivative(P(f3, {0, 0, 0, 1}), 1).is_zero());
    CHECK(hasse_derivative(P(f3, {2}), 1).is_zero());
    CHECK(hasse_derivative(P(f3, {1, 2, 1}), 0) == P(f3, {1, 2, 1}));
    CHECK(hasse_derivative(P(f3, {1, 2}), 5).is_zero());
}

TEST_CASE("composition identity") {
    const auto f2 = Field::create(2), f3 = Field::create(3);
    CHECK(hasse_compose_check(P(f2, {0, 0, 0, 0, 1}), 1, 1));
    CHECK(hasse_derivative(hasse_derivative(P(f2, {0, 0, 0, 0, 1}), 1), 1).is_zero());
    CHECK(hasse_compose_check(Poly(f3), 2, 3));
    std::mt19937_64 rng(7);
    for (auto q : {2u, 3u, 4u, 5u, 9u})
        for (int t = 0; t < 100; ++t) {
            const auto f = Field::create(q);
            REQUIRE(hasse_compose_check(random_poly(f, 10, rng), rng() % 5, rng() % 5));
        }
}

TEST_CASE("Hasse evaluation") {
    const auto f3 = Field::create(3);
    CHECK(hasse_eval(P(f3, {1, 2, 1}), 0, EvalPoint::infinity(), 3) == Element{1});
    CHECK(hasse_eval(P(f3, {1, 2, 1}), 2, EvalPoint::infinity(), 3) == Element{1});
    CHECK(hasse_eval(P(f3, {1, 2}), 0, EvalPoint::infinity(), 3) == Element{0});
    CHECK(hasse_eval(P(f3, {0, 0, 1}), 1, Element{1}) == Element{2});
    CHECK(hasse_eval(Poly(f3), 4, Element{2}) == Element{0});
    CHECK_THROWS(hasse_eval(P(f3, {1, 2, 1}), 3, EvalPoint::infinity(), 3));
    CHECK_THROWS(hasse_eval(P(f3, {1, 2, 1}), 0, EvalPoint::infinity(), 2));
}

TEST_CASE("Horner evaluation matches the materialized derivative") {
    std::mt19937_64 rng(11);
    for (auto q : udm::test::kSmallFields) {
        const auto f = Field::create(q);
        const BinomialTable binom(f->characteristic(), 20);
        for (int t = 0; t < 200; ++t) {
            const Poly a = random_poly(f, 15, rng);
            const std::size_t n = rng() % 18;
            const Element x = random_element(*f, rng);
            const Element want = hasse_derivative(a, n).evaluate(x);
            REQUIRE(hasse_eval(a, n, x) == want);
            REQUIRE(hasse_eval(a, n, x, binom) == want);
        }
    }
}

TEST_CASE("product rule") {
    std::mt19937_64 rng(1);
    for (auto q : udm::test::kSmallFields) {
        const auto f = Field::create(q);
        for (int t = 0; t < 150; ++t) {
            const Poly a = random_poly(f, 8, rng), b = random_poly(f, 8, rng);
            const std::size_t i = rng() % 6;
            Poly sum(f);
            for (std::size_t j = 0; j <= i; ++j) sum += hasse_derivative(a, j) * hasse_derivative(b, i - j);
            REQUIRE(hasse_derivative(a * b, i) == sum);
        }
    }
}

TEST_CASE("product rule over three factors") {
    std::mt19937_64 rng(2);
    for (auto q : {2u, 3u, 4u, 5u}) {
        const auto f = Field::create(q);
        for (int t = 0; t < 100; ++t) {
            const Poly a = random_poly(f, 4, rng), b = random_poly(f, 4, rng), c = random_poly(f, 4, rng);
            const std::size_t i = rng() % 6;
            Poly sum(f);
            for (std::size_t i0 = 0; i0 <= i; ++i0)
                for (std::size_t i1 = 0; i0 + i1 <= i; ++i1)
                    sum += hasse_derivative(a, i0) * hasse_derivative(b, i1) * hasse_derivative(c, i - i0 - i1);
            REQUIRE(hasse_derivative(a * b * c, i) == sum);
        }
    }
}

TEST_CASE("power rule for (X - beta)^m") {
    for (auto q : udm::test::kSmallFields) {
        const auto f = Field::create(q);
        for (std::uint32_t b = 0; b < q; ++b)
            for (std::size_t m = 0; m < 9; ++m)
                for (std::size_t i = 0; i <= m + 1; ++i) {
                    const Poly lhs = hasse_derivative(Poly::linear_power(f, Element{b}, m), i);
                    const Poly rhs = i > m ? Poly(f)
                                           : Poly::linear_power(f, Element{b}, m - i)
                                                 .scaled(f->natural_map(static_cast<std::int64_t>(binomial_mod_p(m, i, f->characteristic()))));
                    REQUIRE(lhs == rhs);
                }
    }
}

TEST_CASE("linearity") {
    std::mt19937_64 rng(3);
    for (auto q : udm::test::kSmallFields) {
        const auto f = Field::create(q);
        for (int t = 0; t < 150; ++t) {
            const Poly a = random_poly(f, 10, rng), b = random_poly(f, 10, rng);
            const Element c = random_element(*f, rng), d = random_element(*f, rng);
            const std::size_t i = rng() % 8;
            REQUIRE(hasse_derivative(a.scaled(c) + b.scaled(d), i) ==
                    hasse_derivative(a, i).scaled(c) + hasse_derivative(b, i).scaled(d));
        }
    }
}

TEST_CASE("Taylor expansion examples") {
    const auto f3 = Field::create(3);
    const auto t = taylor_expand(P(f3, {0, 0, 1}), Element{1});
    CHECK(t.coeffs == std::vector<Element>{Element{1}, Element{2}, Element{1}});
    CHECK(taylor_reconstruct(f3, {Element{1}, {Element{1}, Element{2}, Element{1}}}) == P(f3, {0, 0, 1}));
    const Poly a = P(f3, {2, 1, 0, 2});
    CHECK(taylor_expand(a, Element{0}).coeffs == a.coeffs());
    CHECK(taylor_reconstruct(f3, {Element{0}, a.coeffs()}) == a);
    const auto e = taylor_expand(Poly::linear_power(f3, Element{2}, 3), Element{2});
    CHECK(e.coeffs == std::vector<Element>{Element{0}, Element{0}, Element{0}, Element{1}});
    CHECK(taylor_reconstruct(f3, {Element{2}, e.coeffs}) == Poly::linear_power(f3, Element{2}, 3));
}

TEST_CASE("Taylor round trip for q <= 16") {
    std::mt19937_64 rng(4);
    for (auto q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        const auto f = Field::create(q);
        for (int t = 0; t < 100; ++t) {
            const Poly a = random_poly(f, 12, rng);
            const Element beta = random_element(*f, rng);
            REQUIRE(taylor_reconstruct(f, taylor_expand(a, beta)) == a);
        }
    }
}

TEST_CASE("root multiplicity") {
    const auto f3 = Field::create(3);
    const Poly a = Poly::linear_power(f3, Element{1}, 2) * Poly::linear_power(f3, Element{2}, 1);
    CHECK(root_multiplicity(a, Element{1}) == 2);
    CHECK(root_multiplicity(a, Element{0}) == 0);
    CHECK(root_multiplicity(P(f3, {0, 0, 0, 0, 1}), Element{0}) == 4);
    CHECK_THROWS_AS(root_multiplicity(Poly(f3), Element{0}), DomainError);
}

TEST_CASE("root multiplicity matches repeated division") {
    std::mt19937_64 rng(5);
    for (auto q : udm::test::kSmallFields) {
        const auto f = Field::create(q);
        for (int t = 0; t < 150; ++t) {
            Poly a = random_poly(f, 5, rng);
            if (a.is_zero()) continue;
            const Element beta = random_element(*f, rng);
            a = a * Poly::linear_power(f, beta, rng() % 5);
            REQUIRE(root_multiplicity(a, beta) == multiplicity_by_division(a, beta));
        }
    }
}

TEST_CASE("polynomial basics") {
    const auto f5 = Field::create(5);
    CHECK(Poly(f5).degree() == -1);
    CHECK(to_string(Poly(f5)) == "0");
    CHECK(to_string(P(f5, {1, 0, 4})) == "1,0,4");
    CHECK(P(f5, {1, 2, 0, 0}).degree() == 1);
    CHECK((P(f5, {1, 4}) + P(f5, {4, 1})).is_zero());
    CHECK(P(f5, {1, 1}) * P(f5, {4, 1}) == P(f5, {4, 0, 1}));
    CHECK(P(f5, {3, 0, 1}).evaluate(Element{2}) == Element{2});
    CHECK(to_string(EvalPoint::infinity()) == "inf");
    CHECK_THROWS(P(f5, {1, 2, 3}).padded(2));
}

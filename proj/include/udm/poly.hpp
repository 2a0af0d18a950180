#ifndef UDM_POLY_HPP
#define UDM_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "udm/gf.hpp"

namespace udm {

/// Dense univariate polynomial over a finite field, coefficients indexed by
/// power. Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
class Poly {
public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Element> coeffs);

    static Poly constant(FieldPtr field, Element c);
    static Poly monomial(FieldPtr field, Element c, std::size_t power);
    /// (X - beta)^m
    static Poly linear_power(FieldPtr field, Element beta, std::size_t m);

    const FieldPtr& field() const { return field_; }
    const std::vector<Element>& coeffs() const { return coeffs_; }
    /// Coefficient of X^k; zero past the degree.
    Element coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Element{}; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficients padded with zeros to `length`. Throws if the degree does
    /// not fit.
    std::vector<Element> padded(std::size_t length) const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    Poly scaled(Element c) const;
    Element evaluate(Element x) const;

private:
    void normalize();

    FieldPtr field_;
    std::vector<Element> coeffs_;
};

/// Low-degree-first, comma separated; the zero polynomial prints as "0".
std::string to_string(const Poly& a);

/// C(k, n) mod p via the Lucas digit product. Zero when k < n.
std::uint32_t binomial_mod_p(std::uint64_t k, std::uint64_t n, std::uint32_t p);

/// Pascal's triangle mod p for rows 0..max_k, filled by additions only.
class BinomialTable {
public:
    BinomialTable(std::uint32_t p, std::size_t max_k);

    std::size_t max_k() const { return max_k_; }
    std::uint32_t operator()(std::size_t k, std::size_t n) const {
        return n > k ? 0 : rows_[k * (k + 1) / 2 + n];
    }

private:
    std::size_t max_k_;
    std::vector<std::uint32_t> rows_;
};

/// Evaluation point that is either a field element or the point at infinity.
/// The value at infinity of the n-th Hasse derivative depends on the code
/// length K, so it is supplied separately where needed.
class EvalPoint {
public:
    static EvalPoint finite(Element e) { return EvalPoint(false, e); }
    static EvalPoint infinity() { return EvalPoint(true, Element{}); }

    bool is_infinite() const { return infinite_; }
    Element value() const { return value_; }
    friend bool operator==(const EvalPoint&, const EvalPoint&) = default;

private:
    EvalPoint(bool inf, Element e) : infinite_(inf), value_(e) {}

    bool infinite_;
    Element value_;
};

std::string to_string(const EvalPoint& pt);

/// i-th Hasse derivative: sum_k C(k, i) a_k X^(k-i).
Poly hasse_derivative(const Poly& a, std::size_t i);

/// D^i1 D^i2 a == C(i1 + i2, i1) D^(i1 + i2) a
bool hasse_compose_check(const Poly& a, std::size_t i1, std::size_t i2);

/// n-th Hasse derivative of a evaluated at a finite point, by Horner's rule
/// without materializing the derivative.
Element hasse_eval(const Poly& a, std::size_t n, Element point);
Element hasse_eval(const Poly& a, std::size_t n, Element point, const BinomialTable& binom);

/// Same, also accepting infinity where a^(n)(inf) is the coefficient of
/// X^(K-1-n). For infinity K must exceed deg(a) and n must be below K.
Element hasse_eval(const Poly& a, std::size_t n, const EvalPoint& point, std::size_t K);

struct TaylorCoeffs {
    Element beta;
    std::vector<Element> coeffs;  // coefficient of (X - beta)^n at index n
};

TaylorCoeffs taylor_expand(const Poly& a, Element beta);
Poly taylor_reconstruct(const FieldPtr& field, const TaylorCoeffs& t);

/// Multiplicity of beta as a root of a non-zero polynomial.
std::size_t root_multiplicity(const Poly& a, Element beta);

}  // namespace udm

#endif  // UDM_POLY_HPP

#ifndef UDM_GF_HPP
#define UDM_GF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "udm/error.hpp"

namespace udm {

/// Element of GF(p^s) in polynomial-basis representation. The coefficient of
/// X^i is the i-th radix-p digit of `value`, so the numeric order of `value`
/// is the canonical element order and `value` is also the serialized form.
struct Element {
    std::uint32_t value = 0;

    constexpr Element() = default;
    constexpr explicit Element(std::uint32_t v) : value(v) {}

    constexpr bool is_zero() const { return value == 0; }
    friend constexpr auto operator<=>(Element, Element) = default;
};

/// Multiplication/inversion counters of the calling thread. Additions are not
/// counted.
struct OpCounts {
    std::uint64_t mul = 0;
    std::uint64_t inv = 0;

    std::uint64_t total() const { return mul + inv; }
};

OpCounts& thread_op_counts();

/// Captures the op counters on construction; `elapsed()` returns the number
/// of multiplications and inversions done on this thread since.
class ScopedOpCount {
public:
    ScopedOpCount() : start_(thread_op_counts()) {}
    OpCounts elapsed() const {
        const OpCounts& now = thread_op_counts();
        return {now.mul - start_.mul, now.inv - start_.inv};
    }

private:
    OpCounts start_;
};

/// A concrete finite field GF(p^s).
///
/// The modulus defaults to the smallest monic irreducible polynomial of
/// degree s, comparing coefficients from the constant term upward. The
/// designated primitive element is the smallest element (by value) of
/// multiplicative order q-1. Fields are immutable after construction and are
/// shared through `FieldPtr`.
class Field {
public:
    /// Builds GF(q). Throws DomainError if q is not a prime power.
    static std::shared_ptr<const Field> create(std::uint64_t q);

    /// Builds GF(p^s) with an explicit modulus, low-degree-first, monic,
    /// length s+1. For s == 1 the modulus must be X (coefficients {0, 1}).
    static std::shared_ptr<const Field> create(std::uint32_t p, std::uint32_t s,
                                               std::vector<std::uint32_t> modulus);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return s_; }
    std::uint32_t order() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Element primitive() const { return alpha_; }
    std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

    Element zero() const { return Element{0}; }
    Element one() const { return Element{1}; }
    bool contains(Element a) const { return a.value < q_; }
    /// Throws DomainError unless v < q.
    Element element(std::uint64_t v) const;

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    /// Throws DivisionByZero on a == 0.
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    /// Negative exponents are allowed for non-zero a.
    Element pow(Element a, std::int64_t e) const;

    /// Image of n in the prime subfield (n mod p, negative n allowed).
    Element natural_map(std::int64_t n) const;

    /// Multiplicative order of a non-zero element.
    std::uint64_t multiplicative_order(Element a) const;
    bool is_primitive(Element a) const;

    bool operator==(const Field& other) const {
        return p_ == other.p_ && s_ == other.s_ && modulus_ == other.modulus_;
    }

private:
    Field(std::uint32_t p, std::uint32_t s, std::vector<std::uint32_t> modulus);

    Element mul_slow(Element a, Element b) const;
    Element find_primitive() const;

    std::uint32_t p_;
    std::uint32_t s_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> order_factors_;  // distinct primes dividing q-1
    Element alpha_;
    // log/exp tables for extension fields up to 2^16 elements
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Factorization helpers shared with the rest of the library.
bool is_prime(std::uint64_t n);
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Trial-division irreducibility test over GF(p); `poly` is low-degree-first
/// and monic.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Smallest monic irreducible polynomial of degree s over GF(p), compared
/// low-degree-first.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t s);

}  // namespace udm

#endif  // UDM_GF_HPP

#include "udm/gf.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace udm {

namespace {

constexpr std::uint64_t kMaxOrder = 1ull << 31;
constexpr std::uint32_t kMaxTableOrder = 1u << 16;

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

using DigitPoly = std::vector<std::uint32_t>;

void trim(DigitPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over GF(p); b must be non-zero with trimmed form.
DigitPoly poly_mod(DigitPoly a, const DigitPoly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const auto lead_inv = static_cast<std::uint32_t>(pow_mod(b.back(), p - 2, p));
    while (a.size() > db) {
        const std::size_t shift = a.size() - 1 - db;
        const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = factor * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

}  // namespace

OpCounts& thread_op_counts() {
    thread_local OpCounts counts;
    return counts;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    DigitPoly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // Try every monic divisor of degree 1..deg/2.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            DigitPoly g(d + 1);
            std::uint64_t rest = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t s) {
    if (s == 1) return {0, 1};
    // Enumerate (c_0, ..., c_{s-1}) lexicographically with c_0 most significant.
    std::vector<std::uint32_t> c(s, 0);
    while (true) {
        std::vector<std::uint32_t> candidate = c;
        candidate.push_back(1);
        if (is_irreducible_mod_p(candidate, p)) return candidate;
        std::size_t i = s;
        while (i > 0) {
            --i;
            if (++c[i] < p) break;
            c[i] = 0;
            if (i == 0) throw DomainError("no irreducible polynomial found");
        }
    }
}

std::shared_ptr<const Field> Field::create(std::uint64_t q) {
    if (q < 2) throw DomainError("field order must be at least 2, got " + std::to_string(q));
    if (q >= kMaxOrder) throw DomainError("field order too large: " + std::to_string(q));
    const auto fac = factorize(q);
    if (fac.size() != 1) {
        std::ostringstream msg;
        msg << "field order " << q << " is not a prime power: " << q << " =";
        for (std::size_t i = 0; i < fac.size(); ++i) {
            msg << (i ? " *" : "") << ' ' << fac[i].first;
            if (fac[i].second > 1) msg << '^' << fac[i].second;
        }
        throw DomainError(msg.str());
    }
    const auto p = static_cast<std::uint32_t>(fac[0].first);
    const auto s = fac[0].second;
    return create(p, s, smallest_irreducible(p, s));
}

std::shared_ptr<const Field> Field::create(std::uint32_t p, std::uint32_t s,
                                           std::vector<std::uint32_t> modulus) {
    return std::shared_ptr<const Field>(new Field(p, s, std::move(modulus)));
}

Field::Field(std::uint32_t p, std::uint32_t s, std::vector<std::uint32_t> modulus)
    : p_(p), s_(s), q_(0), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    if (s < 1) throw DomainError("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < s; ++i) {
        q *= p;
        if (q >= kMaxOrder) throw DomainError("field order too large");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (modulus_.size() != s + 1 || modulus_.back() != 1) {
        throw DomainError("modulus must be monic of degree " + std::to_string(s));
    }
    for (auto c : modulus_) {
        if (c >= p) throw DomainError("modulus coefficient out of range");
    }
    if (s == 1) {
        if (modulus_ != std::vector<std::uint32_t>{0, 1}) {
            throw DomainError("prime field modulus placeholder must be X");
        }
    } else if (!is_irreducible_mod_p(modulus_, p)) {
        throw DomainError("modulus is reducible over GF(" + std::to_string(p) + ")");
    }
    for (const auto& [r, e] : factorize(q_ - 1)) order_factors_.push_back(r);
    alpha_ = find_primitive();

    if (s > 1 && q_ <= kMaxTableOrder) {
        exp_.resize(q_ - 1);
        log_.assign(q_, 0);
        Element x = one();
        for (std::uint32_t i = 0; i + 1 < q_; ++i) {
            exp_[i] = x.value;
            log_[x.value] = i;
            x = mul_slow(x, alpha_);
        }
    }
}

Element Field::element(std::uint64_t v) const {
    if (v >= q_) {
        throw DomainError("value " + std::to_string(v) + " is not an element of " + name());
    }
    return Element{static_cast<std::uint32_t>(v)};
}

Element Field::add(Element a, Element b) const {
    if (s_ == 1) {
        std::uint64_t r = static_cast<std::uint64_t>(a.value) + b.value;
        if (r >= p_) r -= p_;
        return Element{static_cast<std::uint32_t>(r)};
    }
    if (p_ == 2) return Element{a.value ^ b.value};
    std::uint32_t x = a.value, y = b.value, r = 0, place = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        r += ((x % p_ + y % p_) % p_) * place;
        x /= p_;
        y /= p_;
        place *= p_;
    }
    return Element{r};
}

Element Field::neg(Element a) const {
    if (s_ == 1) return Element{a.value == 0 ? 0 : p_ - a.value};
    if (p_ == 2) return a;
    std::uint32_t x = a.value, r = 0, place = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        r += ((p_ - x % p_) % p_) * place;
        x /= p_;
        place *= p_;
    }
    return Element{r};
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::mul_slow(Element a, Element b) const {
    if (s_ == 1) {
        return Element{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
    }
    DigitPoly x(s_), y(s_);
    for (std::uint32_t i = 0, va = a.value, vb = b.value; i < s_; ++i) {
        x[i] = va % p_;
        y[i] = vb % p_;
        va /= p_;
        vb /= p_;
    }
    DigitPoly prod(2 * s_ - 1, 0);
    for (std::uint32_t i = 0; i < s_; ++i) {
        if (!x[i]) continue;
        for (std::uint32_t j = 0; j < s_; ++j) {
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_);
        }
    }
    const DigitPoly rem = poly_mod(std::move(prod), modulus_, p_);
    std::uint32_t r = 0, place = 1;
    for (std::size_t i = 0; i < rem.size(); ++i) {
        r += rem[i] * place;
        place *= p_;
    }
    return Element{r};
}

Element Field::mul(Element a, Element b) const {
    ++thread_op_counts().mul;
    if (s_ == 1) {
        return Element{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
    }
    if (!exp_.empty()) {
        if (a.is_zero() || b.is_zero()) return zero();
        return Element{exp_[(log_[a.value] + log_[b.value]) % (q_ - 1)]};
    }
    return mul_slow(a, b);
}

Element Field::inv(Element a) const {
    if (a.is_zero()) throw DivisionByZero();
    ++thread_op_counts().inv;
    if (s_ == 1) return Element{static_cast<std::uint32_t>(pow_mod(a.value, p_ - 2, p_))};
    if (!exp_.empty()) return Element{exp_[(q_ - 1 - log_[a.value]) % (q_ - 1)]};
    // a^(q-2) by square-and-multiply on the uncounted path
    Element r = one(), base = a;
    for (std::uint64_t e = q_ - 2; e; e >>= 1) {
        if (e & 1) r = mul_slow(r, base);
        base = mul_slow(base, base);
    }
    return r;
}

Element Field::pow(Element a, std::int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    if (a.is_zero()) return e == 0 ? one() : zero();
    // exponents only matter modulo q-1 for non-zero a
    std::uint64_t k = static_cast<std::uint64_t>(e) % (q_ - 1);
    Element r = one();
    while (k) {
        if (k & 1) r = mul(r, a);
        k >>= 1;
        if (k) a = mul(a, a);
    }
    return r;
}

Element Field::natural_map(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Element{static_cast<std::uint32_t>(r)};
}

std::uint64_t Field::multiplicative_order(Element a) const {
    if (a.is_zero()) throw DomainError("zero has no multiplicative order");
    auto raw_pow = [this](Element x, std::uint64_t e) {
        Element r = one();
        while (e) {
            if (e & 1) r = mul_slow(r, x);
            x = mul_slow(x, x);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t order = q_ - 1;
    for (auto r : order_factors_) {
        while (order % r == 0 && raw_pow(a, order / r) == one()) order /= r;
    }
    return order;
}

bool Field::is_primitive(Element a) const {
    return contains(a) && !a.is_zero() && multiplicative_order(a) == q_ - 1;
}

Element Field::find_primitive() const {
    for (std::uint32_t v = 1; v < q_; ++v) {
        if (multiplicative_order(Element{v}) == q_ - 1) return Element{v};
    }
    throw DomainError("no primitive element found");  // unreachable for a field
}

}  // namespace udm

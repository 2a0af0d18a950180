#include "udm/poly.hpp"

#include <algorithm>
#include <sstream>

namespace udm {

Poly::Poly(FieldPtr field, std::vector<Element> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_) {
        if (!field_->contains(c)) throw DomainError("coefficient outside " + field_->name());
    }
    normalize();
}

Poly Poly::constant(FieldPtr field, Element c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Element c, std::size_t power) {
    std::vector<Element> v(power + 1);
    v[power] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::linear_power(FieldPtr field, Element beta, std::size_t m) {
    const Poly factor(field, {field->neg(beta), field->one()});
    Poly r = constant(field, field->one());
    for (std::size_t i = 0; i < m; ++i) r = r * factor;
    return r;
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::vector<Element> Poly::padded(std::size_t length) const {
    if (coeffs_.size() > length) {
        throw DomainError("polynomial of degree " + std::to_string(degree()) +
                          " does not fit in length " + std::to_string(length));
    }
    std::vector<Element> v = coeffs_;
    v.resize(length);
    return v;
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] = field_->add(coeffs_[i], other.coeffs_[i]);
    }
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] = field_->sub(coeffs_[i], other.coeffs_[i]);
    }
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const Field& F = *a.field_;
    std::vector<Element> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            r[i + j] = F.add(r[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    return Poly(a.field_, std::move(r));
}

Poly Poly::scaled(Element c) const {
    std::vector<Element> r(coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->mul(coeffs_[i], c);
    return Poly(field_, std::move(r));
}

Element Poly::evaluate(Element x) const {
    Element r{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        r = field_->add(field_->mul(r, x), *it);
    }
    return r;
}

std::string to_string(const Poly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        out << (i ? "," : "") << a.coeffs()[i].value;
    }
    return out.str();
}

std::string to_string(const EvalPoint& pt) {
    return pt.is_infinite() ? "inf" : std::to_string(pt.value().value);
}

namespace {

// C(a, b) mod p for 0 <= b <= a < p.
std::uint64_t small_binomial(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    b = std::min(b, a - b);
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < b; ++i) {
        num = num * ((a - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    // den^(p-2)
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return num * inv % p;
}

}  // namespace

std::uint32_t binomial_mod_p(std::uint64_t k, std::uint64_t n, std::uint32_t p) {
    if (n > k) return 0;
    std::uint64_t r = 1;
    while (n > 0 || k > 0) {
        const std::uint64_t kd = k % p, nd = n % p;
        if (nd > kd) return 0;
        r = r * small_binomial(kd, nd, p) % p;
        k /= p;
        n /= p;
    }
    return static_cast<std::uint32_t>(r);
}

BinomialTable::BinomialTable(std::uint32_t p, std::size_t max_k)
    : max_k_(max_k), rows_((max_k + 1) * (max_k + 2) / 2) {
    for (std::size_t k = 0; k <= max_k; ++k) {
        const std::size_t base = k * (k + 1) / 2;
        rows_[base] = 1 % p;
        rows_[base + k] = 1 % p;
        const std::size_t prev = base - k;
        for (std::size_t n = 1; n < k; ++n) {
            rows_[base + n] = static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(rows_[prev + n - 1]) + rows_[prev + n]) % p);
        }
    }
}

Poly hasse_derivative(const Poly& a, std::size_t i) {
    const Field& F = *a.field();
    const auto& c = a.coeffs();
    if (c.size() <= i) return Poly(a.field());
    std::vector<Element> r(c.size() - i);
    for (std::size_t j = 0; j < r.size(); ++j) {
        const auto b = binomial_mod_p(i + j, i, F.characteristic());
        r[j] = F.mul(F.natural_map(b), c[i + j]);
    }
    return Poly(a.field(), std::move(r));
}

bool hasse_compose_check(const Poly& a, std::size_t i1, std::size_t i2) {
    const Field& F = *a.field();
    const Poly lhs = hasse_derivative(hasse_derivative(a, i2), i1);
    const Poly rhs = hasse_derivative(a, i1 + i2).scaled(
        F.natural_map(binomial_mod_p(i1 + i2, i1, F.characteristic())));
    return lhs == rhs;
}

namespace {

// point must be non-zero; the zero point reads off a coefficient directly.
template <typename Binom>
Element hasse_horner(const Poly& a, std::size_t n, Element point, Binom&& binom) {
    const Field& F = *a.field();
    const auto& c = a.coeffs();
    Element r{};
    for (std::size_t k = c.size(); k-- > n;) {
        r = F.mul(r, point);
        const std::uint32_t b = binom(k, n);
        if (b == 0 || c[k].is_zero()) continue;
        r = F.add(r, b == 1 ? c[k] : F.mul(F.natural_map(b), c[k]));
    }
    return r;
}

}  // namespace

Element hasse_eval(const Poly& a, std::size_t n, Element point) {
    if (point.is_zero()) return a.coeff(n);
    const auto p = a.field()->characteristic();
    return hasse_horner(a, n, point,
                        [p](std::size_t k, std::size_t m) { return binomial_mod_p(k, m, p); });
}

Element hasse_eval(const Poly& a, std::size_t n, Element point, const BinomialTable& binom) {
    if (point.is_zero()) return a.coeff(n);
    if (a.coeffs().size() > binom.max_k() + 1) {
        throw DomainError("binomial table too small for polynomial degree");
    }
    return hasse_horner(a, n, point, binom);
}

Element hasse_eval(const Poly& a, std::size_t n, const EvalPoint& point, std::size_t K) {
    if (!point.is_infinite()) return hasse_eval(a, n, point.value());
    if (n >= K) {
        throw DomainError("derivative order " + std::to_string(n) + " at infinity needs n < K = " +
                          std::to_string(K));
    }
    if (a.degree() >= static_cast<int>(K)) {
        throw DomainError("evaluation at infinity needs deg < K");
    }
    return a.coeff(K - 1 - n);
}

TaylorCoeffs taylor_expand(const Poly& a, Element beta) {
    TaylorCoeffs t{beta, {}};
    t.coeffs.reserve(a.coeffs().size());
    for (std::size_t n = 0; n < a.coeffs().size(); ++n) t.coeffs.push_back(hasse_eval(a, n, beta));
    return t;
}

Poly taylor_reconstruct(const FieldPtr& field, const TaylorCoeffs& t) {
    // a_k = sum_n t_n C(n, k) (-beta)^(n-k)
    const Field& F = *field;
    const Element minus_beta = F.neg(t.beta);
    const auto p = F.characteristic();
    std::vector<Element> a(t.coeffs.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        Element acc{};
        Element power = F.one();  // (-beta)^(n-k)
        for (std::size_t n = k; n < t.coeffs.size(); ++n) {
            const auto b = binomial_mod_p(n, k, p);
            if (b != 0 && !t.coeffs[n].is_zero()) {
                acc = F.add(acc, F.mul(F.mul(F.natural_map(b), t.coeffs[n]), power));
            }
            power = F.mul(power, minus_beta);
        }
        a[k] = acc;
    }
    return Poly(field, std::move(a));
}

std::size_t root_multiplicity(const Poly& a, Element beta) {
    if (a.is_zero()) throw DomainError("root multiplicity of the zero polynomial is undefined");
    for (std::size_t n = 0;; ++n) {
        if (!hasse_eval(a, n, beta).is_zero()) return n;
    }
}

}  // namespace udm

#include "udm/codec.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "udm/error.hpp"

namespace udm {

ChannelOutput::ChannelOutput(std::size_t N, std::vector<std::vector<Element>> prefixes)
    : N_(N), prefixes_(std::move(prefixes)) {
    for (std::size_t l = 0; l < prefixes_.size(); ++l) {
        if (prefixes_[l].size() > N_) {
            throw DomainError("channel " + std::to_string(l) + " carries more than N symbols");
        }
    }
}

ErasurePattern ChannelOutput::pattern() const {
    ErasurePattern p;
    for (const auto& r : prefixes_) p.v.push_back(r.size());
    return p;
}

std::vector<Vector> encode_matrix(const Family& family, const InfoVector& u) {
    if (u.size() != family.K()) {
        throw DomainError("information vector has length " + std::to_string(u.size()) + ", expected K = " +
                          std::to_string(family.K()));
    }
    std::vector<Vector> x;
    for (const auto& a : family.matrices()) x.push_back(multiply(a, u));
    return x;
}

std::vector<Vector> encode_taylor(const FieldPtr& field, const InfoVector& u,
                                  const BetaSequence& betas, std::size_t N) {
    const std::size_t K = u.size();
    if (N > K) throw DomainError("encode_taylor needs N ≤ K");
    const Poly poly(field, u);
    std::vector<Vector> x(betas.size(), Vector(N));
    for (std::size_t l = 0; l < betas.size(); ++l)
        for (std::size_t n = 0; n < N; ++n) x[l][n] = hasse_eval(poly, n, betas[l], K);
    return x;
}

ChannelOutput channel_erase(const std::vector<Vector>& x, const ErasurePattern& v) {
    if (x.size() != v.size()) throw DomainError("pattern length differs from channel count");
    if (x.empty()) throw DomainError("no channels");
    const std::size_t N = x.front().size();
    std::vector<std::vector<Element>> prefixes;
    for (std::size_t l = 0; l < x.size(); ++l) {
        if (x[l].size() != N) throw DomainError("channel vectors differ in length");
        if (v[l] > N) throw DomainError("v_" + std::to_string(l) + " exceeds N");
        prefixes.emplace_back(x[l].begin(), x[l].begin() + static_cast<std::ptrdiff_t>(v[l]));
    }
    return ChannelOutput(N, std::move(prefixes));
}

ErasurePattern trim_pattern(const ErasurePattern& v, std::size_t K) {
    ErasurePattern r = v;
    std::size_t excess = r.sum() > K ? r.sum() - K : 0;
    for (std::size_t l = r.size(); l-- > 0 && excess > 0;) {
        const std::size_t cut = std::min(excess, r.v[l]);
        r.v[l] -= cut;
        excess -= cut;
    }
    return r;
}

namespace {

using u128 = unsigned __int128;

u128 checked_add(u128 a, u128 b) {
    if (a > std::numeric_limits<u128>::max() - b) {
        throw DomainError("pattern count overflows 128 bits");
    }
    return a + b;
}

u128 uniform_below(std::mt19937_64& rng, u128 bound) {
    const u128 threshold = (u128(0) - bound) % bound;
    while (true) {
        const u128 r = (u128(rng()) << 64) | u128(rng());
        if (r >= threshold) return r % bound;
    }
}

}  // namespace

PatternSampler::PatternSampler(std::size_t L, std::size_t N, std::size_t K, PatternMode mode)
    : L_(L), N_(N), K_(K), mode_(mode), ways_(L + 1) {
    // exact mode never needs sums above K, which keeps large L and N in range
    const std::size_t cap = mode == PatternMode::exact ? K : L * N;
    ways_[L] = {1};
    for (std::size_t l = L; l-- > 0;) {
        const std::size_t max_sum = std::min((L - l) * N, cap);
        ways_[l].assign(max_sum + 1, 0);
        for (std::size_t s = 0; s <= max_sum; ++s)
            for (std::size_t x = 0; x <= std::min(N, s); ++x) {
                if (s - x < ways_[l + 1].size()) ways_[l][s] = checked_add(ways_[l][s], ways_[l + 1][s - x]);
            }
    }
    const auto& top = ways_[0];
    if (mode == PatternMode::exact) {
        total_ = K < top.size() ? top[K] : 0;
    } else {
        for (std::size_t s = K; s < top.size(); ++s) total_ = checked_add(total_, top[s]);
    }
}

ErasurePattern PatternSampler::operator()(std::mt19937_64& rng) const {
    if (total_ == 0) throw DomainError("no admissible erasure pattern exists");
    u128 pick = uniform_below(rng, total_);
    std::size_t sum = K_;
    if (mode_ == PatternMode::at_least) {
        while (pick >= ways_[0][sum]) pick -= ways_[0][sum++];
    }
    ErasurePattern p{std::vector<std::size_t>(L_, 0)};
    for (std::size_t l = 0; l < L_; ++l) {
        for (std::size_t x = 0;; ++x) {
            const u128 w = sum - x < ways_[l + 1].size() ? ways_[l + 1][sum - x] : 0;
            if (pick < w) {
                p.v[l] = x;
                sum -= x;
                break;
            }
            pick -= w;
        }
    }
    return p;
}

ErasurePattern sample_pattern(std::size_t L, std::size_t N, std::size_t K, std::uint64_t seed,
                              PatternMode mode) {
    std::mt19937_64 rng(seed);
    return PatternSampler(L, N, K, mode)(rng);
}

InfoVector random_info(const Field& field, std::size_t K, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, field.order() - 1);
    InfoVector u(K);
    for (auto& e : u) e = Element{dist(rng)};
    return u;
}

InfoVector decode_gaussian(const Family& family, const ChannelOutput& out, DecoderTrace* trace) {
    const std::size_t K = family.K();
    if (out.L() != family.L()) throw DomainError("received word has the wrong number of channels");
    const ErasurePattern received = out.pattern();
    if (received.sum() < K) {
        throw DecodeError("insufficient symbols: received " + std::to_string(received.sum()) + ", need K = " +
                          std::to_string(K));
    }
    const ErasurePattern v = trim_pattern(received, K);
    const Matrix a = stacked_matrix(family, v);
    Vector y;
    for (std::size_t l = 0; l < out.L(); ++l)
        for (std::size_t n = 0; n < v[l]; ++n) y.push_back(out.received(l)[n]);

    const ScopedOpCount ops;
    InfoVector u;
    try {
        u = solve(a, y);
    } catch (const SingularError&) {
        throw DecodeError("stacked matrix is singular for pattern " + to_string(v) + ": the family is not UDM");
    }
    if (trace) {
        trace->field_ops = ops.elapsed().total();
        trace->field_muls = ops.elapsed().mul;
    }
    return u;
}

namespace {

// g(L) * (L - beta), O(deg g) multiplications
Poly times_linear(const Poly& g, Element beta) {
    const Field& F = *g.field();
    const auto& c = g.coeffs();
    std::vector<Element> r(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        r[k + 1] = F.add(r[k + 1], c[k]);
        if (!beta.is_zero()) r[k] = F.sub(r[k], F.mul(beta, c[k]));
    }
    return Poly(g.field(), std::move(r));
}

}  // namespace

InfoVector decode_newton(const FieldPtr& field, const ChannelOutput& out, const BetaSequence& betas,
                         std::size_t K, DecoderTrace* trace) {
    const Field& F = *field;
    const std::size_t L = out.L();
    if (betas.size() != L) throw DomainError("evaluation points differ in number from the channels");
    const ErasurePattern received = out.pattern();
    if (received.sum() < K) {
        throw DecodeError("insufficient symbols: received " + std::to_string(received.sum()) + ", need K = " +
                          std::to_string(K));
    }
    const ErasurePattern v = trim_pattern(received, K);
    const ScopedOpCount ops;
    const BinomialTable binom(F.characteristic(), K);

    // Top coefficients straight from the channel at infinity.
    std::vector<Element> top(K);
    std::size_t v_inf = 0;
    for (std::size_t l = 0; l < L; ++l) {
        if (!betas[l].is_infinite()) continue;
        v_inf = v[l];
        for (std::size_t n = 0; n < v_inf; ++n) top[K - 1 - n] = out.received(l)[n];
    }
    const Poly t(field, std::move(top));

    Poly h(field);
    Poly g = Poly::constant(field, F.one());
    struct Consumed {
        Element beta;
        std::size_t n;
        Element value;
    };
    std::vector<Consumed> consumed;

    for (std::size_t l = 0; l < L; ++l) {
        if (betas[l].is_infinite()) continue;
        const Element beta = betas[l].value();
        for (std::size_t n = 0; n < v[l]; ++n) {
            Element y = out.received(l)[n];
            if (!t.is_zero()) y = F.sub(y, hasse_eval(t, n, beta, binom));
            const Element delta = F.sub(y, hasse_eval(h, n, beta, binom));
            const Element gn = hasse_eval(g, n, beta, binom);
            if (gn.is_zero()) {
                throw std::logic_error("Newton decoder: g^(n)(beta) vanished; evaluation points not distinct?");
            }
            if (!delta.is_zero()) h += g.scaled(F.mul(delta, F.inv(gn)));
            g = times_linear(g, beta);

            if (trace && trace->keep_steps) trace->steps.push_back({l, n, delta, h, g});
            if (trace && trace->check_invariants) {
                const ScopedOpCount ignore;
                consumed.push_back({beta, n, y});
                if (g.degree() != static_cast<int>(consumed.size())) {
                    throw std::logic_error("Newton decoder: deg g differs from the number of updates");
                }
                for (const auto& c : consumed) {
                    if (hasse_eval(h, c.n, c.beta) != c.value || !hasse_eval(g, c.n, c.beta).is_zero()) {
                        throw std::logic_error("Newton decoder: interpolation invariant violated");
                    }
                }
            }
        }
    }
    if (h.degree() >= static_cast<int>(K - v_inf)) {
        throw std::logic_error("Newton decoder: deg h reached K - v_inf");
    }
    InfoVector u = (h + t).padded(K);
    if (trace) {
        trace->field_ops = ops.elapsed().total();
        trace->field_muls = ops.elapsed().mul;
    }
    return u;
}

std::vector<OpProfileRow> op_count_profile(const std::vector<std::size_t>& Ks, std::size_t trials,
                                           std::uint64_t seed, std::uint64_t q, std::size_t L) {
    const FieldPtr field = Field::create(q);
    std::vector<OpProfileRow> rows;
    for (std::size_t K : Ks) {
        const Family family = construct_pascal(L, K, K, field);
        const BetaSequence betas = BetaSequence::pascal(*field, *family.pascal_alpha(), L);
        const PatternSampler sampler(L, K, K, PatternMode::exact);
        std::mt19937_64 rng(seed);
        double gaussian = 0, newton = 0, gaussian_muls = 0, newton_muls = 0;
        for (std::size_t i = 0; i < trials; ++i) {
            const InfoVector u = random_info(*field, K, rng);
            const ChannelOutput out = channel_erase(encode_matrix(family, u), sampler(rng));
            DecoderTrace tg, tn;
            const InfoVector ug = decode_gaussian(family, out, &tg);
            const InfoVector un = decode_newton(field, out, betas, K, &tn);
            if (ug != u || un != u) throw std::logic_error("decoder mismatch in op-count profile");
            gaussian += static_cast<double>(tg.field_ops);
            newton += static_cast<double>(tn.field_ops);
            gaussian_muls += static_cast<double>(tg.field_muls);
            newton_muls += static_cast<double>(tn.field_muls);
        }
        const double n = trials ? static_cast<double>(trials) : 1.0;
        rows.push_back({K, gaussian / n, newton / n, gaussian_muls / n, newton_muls / n});
    }
    return rows;
}

}  // namespace udm

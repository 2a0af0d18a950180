#include "udm/family.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

#include "udm/error.hpp"

namespace udm {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::constructed: return "constructed";
        case Provenance::transformed: return "transformed";
        case Provenance::loaded: return "loaded";
    }
    return "unknown";
}

Family::Family(FieldPtr field, std::size_t N, std::size_t K, std::vector<Matrix> matrices,
               Provenance provenance, std::optional<Element> pascal_alpha)
    : field_(std::move(field)),
      N_(N),
      K_(K),
      matrices_(std::move(matrices)),
      provenance_(provenance),
      pascal_alpha_(pascal_alpha) {
    if (matrices_.empty()) throw DomainError("a family needs at least one matrix");
    if (N_ < 1 || K_ < 1) throw DomainError("N and K must be positive");
    if (N_ > K_) {
        throw DomainError("N = " + std::to_string(N_) + " exceeds K = " + std::to_string(K_));
    }
    for (std::size_t l = 0; l < matrices_.size(); ++l) {
        const Matrix& m = matrices_[l];
        if (m.rows() != N_ || m.cols() != K_) {
            throw DomainError("matrix " + std::to_string(l) + " is " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", expected " + std::to_string(N_) + "x" +
                              std::to_string(K_));
        }
        if (!(*m.field() == *field_)) throw DomainError("matrix " + std::to_string(l) + " is over another field");
    }
    if (K_ > L() * N_) {
        warnings_.push_back("K = " + std::to_string(K_) + " exceeds L*N = " + std::to_string(L() * N_) +
                            "; no pattern can deliver K symbols");
    }
}

Family Family::prefix(std::size_t count) const {
    if (count < 1 || count > L()) throw DomainError("prefix length out of range");
    std::vector<Matrix> head(matrices_.begin(), matrices_.begin() + static_cast<std::ptrdiff_t>(count));
    return Family(field_, N_, K_, std::move(head), provenance_, pascal_alpha_);
}

Family Family::with_matrices(std::vector<Matrix> matrices, std::size_t N, std::size_t K,
                             bool keep_pascal) const {
    return Family(field_, N, K, std::move(matrices), Provenance::transformed,
                  keep_pascal ? pascal_alpha_ : std::nullopt);
}

std::size_t ErasurePattern::sum() const { return std::accumulate(v.begin(), v.end(), std::size_t{0}); }

std::string to_string(const ErasurePattern& p) {
    std::ostringstream out;
    out << '(';
    for (std::size_t l = 0; l < p.size(); ++l) out << (l ? "," : "") << p[l];
    out << ')';
    return out.str();
}

BetaSequence BetaSequence::pascal(const Field& field, Element alpha, std::size_t L) {
    if (L > static_cast<std::size_t>(field.order()) + 1) {
        throw DomainError("at most q+1 distinct evaluation points exist");
    }
    BetaSequence b;
    for (std::size_t l = 0; l < L; ++l) {
        if (l == 0) b.points_.push_back(EvalPoint::finite(field.zero()));
        else if (l == 1) b.points_.push_back(EvalPoint::infinity());
        else b.points_.push_back(EvalPoint::finite(field.pow(alpha, static_cast<std::int64_t>(l - 2))));
    }
    return b;
}

namespace {

Element checked_alpha(const Field& field, std::optional<Element> alpha) {
    if (!alpha) return field.primitive();
    if (!field.is_primitive(*alpha)) {
        throw DomainError(std::to_string(alpha->value) + " is not a primitive element of " + field.name());
    }
    return *alpha;
}

void check_channel_count(std::size_t L, const Field& field) {
    if (L < 1) throw DomainError("L must be positive");
    if (L > static_cast<std::size_t>(field.order()) + 1) {
        throw DomainError("bound violation: L = " + std::to_string(L) + " but L ≤ q+1 = " +
                          std::to_string(field.order() + 1) +
                          " is required (no such family exists for K between 2 and 2N)");
    }
}

}  // namespace

Family construct_pascal(std::size_t L, std::size_t N, std::size_t K, const FieldPtr& field,
                        std::optional<Element> alpha) {
    const Field& F = *field;
    check_channel_count(L, F);
    if (N < 1 || K < N) throw DomainError("the construction needs 1 ≤ N ≤ K");
    const Element a = checked_alpha(F, alpha);
    const BinomialTable binom(F.characteristic(), K);

    std::vector<Matrix> ms;
    ms.reserve(L);
    ms.push_back(identity_nk(field, N, K));
    if (L > 1) ms.push_back(reversal_nk(field, N, K));
    for (std::size_t l = 0; l + 2 < L; ++l) {
        Matrix m(field, N, K);
        const Element step = F.pow(a, static_cast<std::int64_t>(l));
        for (std::size_t n = 0; n < N; ++n)
            for (std::size_t k = n; k < K; ++k) {
                const auto b = binom(k, n);
                if (b != 0) m(n, k) = F.mul(F.natural_map(b), F.pow(step, static_cast<std::int64_t>(k - n)));
            }
        ms.push_back(std::move(m));
    }
    return Family(field, N, K, std::move(ms), Provenance::constructed, a);
}

Family construct_pascal(std::size_t L, std::size_t N, std::size_t K, std::uint64_t q,
                        std::optional<Element> alpha) {
    return construct_pascal(L, N, K, Field::create(q), alpha);
}

Family construct_monomial_variant(std::size_t L, std::size_t N, const FieldPtr& field,
                                  std::optional<Element> alpha) {
    const Field& F = *field;
    check_channel_count(L, F);
    const std::size_t p = F.characteristic();
    std::size_t digits = 0;
    for (std::size_t n = N; n > 1; n /= p) {
        if (n % p != 0) throw DomainError("N = " + std::to_string(N) + " is not a power of p = " + std::to_string(p));
        ++digits;
    }
    if (N < 1 || digits == 0) throw DomainError("N must be p^m with m ≥ 1");
    const Element a = checked_alpha(F, alpha);

    std::vector<Matrix> ms;
    ms.push_back(identity(field, N));
    if (L > 1) ms.push_back(reversal_nk(field, N, N));
    for (std::size_t l = 0; l + 2 < L; ++l) {
        Matrix m(field, N, N);
        for (std::size_t n = 0; n < N; ++n)
            for (std::size_t k = 0; k < N; ++k) {
                Element entry = F.one();
                std::size_t nn = n, kk = k;
                std::int64_t place = 1;
                for (std::size_t h = 0; h < digits; ++h) {
                    const auto nh = static_cast<std::int64_t>(nn % p);
                    const auto kh = static_cast<std::int64_t>(kk % p);
                    entry = F.mul(entry, F.pow(F.natural_map(kh), nh));  // 0^0 = 1
                    entry = F.mul(entry, F.pow(a, static_cast<std::int64_t>(l) * (kh - nh) * place));
                    nn /= p;
                    kk /= p;
                    place *= static_cast<std::int64_t>(p);
                }
                m(n, k) = entry;
            }
        ms.push_back(std::move(m));
    }
    return Family(field, N, N, std::move(ms), Provenance::constructed);
}

Family construct_q_plus_2(const FieldPtr& field) {
    const Field& F = *field;
    if (F.characteristic() != 2) {
        throw DomainError("the (q+2,1,3,q) family needs q a power of 2, got " + F.name());
    }
    const Element a = F.primitive();
    auto row = [&](Element x, Element y, Element z) {
        Matrix m(field, 1, 3);
        m(0, 0) = x;
        m(0, 1) = y;
        m(0, 2) = z;
        return m;
    };
    std::vector<Matrix> ms;
    ms.push_back(row(F.one(), F.zero(), F.zero()));
    ms.push_back(row(F.zero(), F.zero(), F.one()));
    for (std::uint32_t l = 0; l + 1 < F.order(); ++l) {
        const Element x = F.pow(a, l);
        ms.push_back(row(F.one(), x, F.mul(x, x)));
    }
    ms.push_back(row(F.zero(), F.one(), F.zero()));
    return Family(field, 1, 3, std::move(ms), Provenance::constructed);
}

void for_each_pattern(std::size_t L, std::size_t N, std::size_t K, PatternMode mode,
                      const std::function<void(const ErasurePattern&)>& visit) {
    if (L == 0) return;
    ErasurePattern p{std::vector<std::size_t>(L, 0)};
    // recurse over channels; `sum` is the total of channels before l
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t l, std::size_t sum) {
        const std::size_t remaining_cap = (L - l - 1) * N;
        for (std::size_t x = 0; x <= N; ++x) {
            const std::size_t s = sum + x;
            if (mode == PatternMode::exact && s > K) break;
            if (s + remaining_cap < K) continue;
            p.v[l] = x;
            if (l + 1 == L) visit(p);
            else rec(l + 1, s);
        }
        p.v[l] = 0;
    };
    rec(0, 0);
}

std::vector<ErasurePattern> enumerate_patterns(std::size_t L, std::size_t N, std::size_t K,
                                               PatternMode mode) {
    std::vector<ErasurePattern> out;
    for_each_pattern(L, N, K, mode, [&](const ErasurePattern& p) { out.push_back(p); });
    return out;
}

Matrix stacked_matrix(const Family& family, const ErasurePattern& v) {
    if (v.size() != family.L()) throw DomainError("pattern length differs from L");
    std::vector<std::pair<const Matrix*, std::size_t>> blocks;
    for (std::size_t l = 0; l < family.L(); ++l) blocks.emplace_back(&family.matrix(l), v[l]);
    return stack_rows(blocks);
}

VerificationReport verify(const Family& family, const VerifyOptions& options) {
    const auto patterns = enumerate_patterns(family.L(), family.N(), family.K(), options.mode);
    const std::size_t total = patterns.size();
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(total, 1))));

    struct Partial {
        std::size_t failures = 0;
        std::size_t first = SIZE_MAX;
    };
    std::vector<Partial> partial(jobs);
    auto work = [&](unsigned j) {
        const std::size_t begin = total * j / jobs, end = total * (j + 1) / jobs;
        for (std::size_t i = begin; i < end; ++i) {
            if (rank(stacked_matrix(family, patterns[i])) != family.K()) {
                ++partial[j].failures;
                partial[j].first = std::min(partial[j].first, i);
            }
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    }

    VerificationReport report;
    report.patterns_checked = total;
    std::size_t first = SIZE_MAX;
    for (const auto& p : partial) {
        report.failures += p.failures;
        first = std::min(first, p.first);
    }
    report.passed = report.failures == 0;
    if (first != SIZE_MAX) {
        report.first_failure = patterns[first];
        report.failing_matrix = stacked_matrix(family, patterns[first]);
    }
    return report;
}

LBound max_L_bound(std::size_t N, std::size_t K, std::uint64_t q) {
    if (N < 1 || K < 1) throw DomainError("N and K must be positive");
    if (K == 1) {
        return {LBound::Kind::unbounded, 0, "K = 1: the matrices (1), ..., (1) work for every L"};
    }
    if (K <= 2 * N) {
        return {LBound::Kind::finite, q + 1, "2 ≤ K ≤ 2N: families exist only for L ≤ q+1"};
    }
    if (K == 2 * N + 1) {
        return {LBound::Kind::finite, q + 2, "K = 2N+1: families exist only for L ≤ q+2"};
    }
    return {LBound::Kind::unknown, 0,
            "K > 2N+1: no bound known; for N = 1 this is the MDS conjecture (L ≤ q+1 for 2 ≤ K ≤ L-2)"};
}

std::string to_string(const LBound& b) {
    switch (b.kind) {
        case LBound::Kind::finite: return "L <= " + std::to_string(b.value) + " (" + b.citation + ")";
        case LBound::Kind::unbounded: return "UNBOUNDED (" + b.citation + ")";
        case LBound::Kind::unknown: return "UNKNOWN (" + b.citation + ")";
    }
    return {};
}

bool check_mds_zeroth_rows(const Family& family) {
    const std::size_t L = family.L(), K = family.K();
    if (L < K) {
        throw DomainError("zeroth-row MDS check needs L ≥ K (L = " + std::to_string(L) +
                          ", K = " + std::to_string(K) + ")");
    }
    Matrix g(family.field(), L, K);
    for (std::size_t l = 0; l < L; ++l) g.set_row(l, family.matrix(l).row(0));

    std::vector<std::size_t> idx(K);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        Matrix sub(family.field(), K, K);
        for (std::size_t i = 0; i < K; ++i) sub.set_row(i, g.row(idx[i]));
        if (rank(sub) != K) return false;
        // next K-subset of [L] in lexicographic order
        std::size_t i = K;
        while (i > 0 && idx[i - 1] == L - K + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < K; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace udm

#ifndef UDM_FAMILY_HPP
#define UDM_FAMILY_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "udm/linalg.hpp"
#include "udm/poly.hpp"

namespace udm {

enum class Provenance { constructed, transformed, loaded };

std::string to_string(Provenance p);

/// L matrices of size N x K over one field. A family is a set of universally
/// decodable matrices when every stack of row prefixes with K rows in total
/// has full rank.
///
/// Families built by the Pascal construction remember their primitive element
/// so the Newton decoder can recover the evaluation points.
class Family {
public:
    Family(FieldPtr field, std::size_t N, std::size_t K, std::vector<Matrix> matrices,
           Provenance provenance = Provenance::constructed,
           std::optional<Element> pascal_alpha = std::nullopt);

    std::size_t L() const { return matrices_.size(); }
    std::size_t N() const { return N_; }
    std::size_t K() const { return K_; }
    const FieldPtr& field() const { return field_; }
    const std::vector<Matrix>& matrices() const { return matrices_; }
    const Matrix& matrix(std::size_t l) const { return matrices_.at(l); }
    Provenance provenance() const { return provenance_; }
    const std::optional<Element>& pascal_alpha() const { return pascal_alpha_; }

    /// Non-fatal findings, e.g. K > L*N.
    const std::vector<std::string>& warnings() const { return warnings_; }

    /// The first `count` matrices, keeping provenance.
    Family prefix(std::size_t count) const;

    /// Same matrices, new provenance; the Pascal tag is dropped unless kept.
    Family with_matrices(std::vector<Matrix> matrices, std::size_t N, std::size_t K,
                         bool keep_pascal = false) const;

    friend bool operator==(const Family& a, const Family& b) {
        return a.N_ == b.N_ && a.K_ == b.K_ && *a.field_ == *b.field_ && a.matrices_ == b.matrices_;
    }

private:
    FieldPtr field_;
    std::size_t N_;
    std::size_t K_;
    std::vector<Matrix> matrices_;
    Provenance provenance_;
    std::optional<Element> pascal_alpha_;
    std::vector<std::string> warnings_;
};

/// Per-channel unerased prefix lengths (v_0, ..., v_{L-1}).
struct ErasurePattern {
    std::vector<std::size_t> v;

    std::size_t size() const { return v.size(); }
    std::size_t operator[](std::size_t l) const { return v[l]; }
    std::size_t sum() const;
    friend auto operator<=>(const ErasurePattern&, const ErasurePattern&) = default;
};

/// "(v0,v1,...)"
std::string to_string(const ErasurePattern& p);

enum class PatternMode { exact, at_least };

/// Evaluation points of the Pascal construction: 0, infinity, then
/// alpha^0, alpha^1, ...
class BetaSequence {
public:
    static BetaSequence pascal(const Field& field, Element alpha, std::size_t L);

    std::size_t size() const { return points_.size(); }
    const EvalPoint& operator[](std::size_t l) const { return points_[l]; }
    const std::vector<EvalPoint>& points() const { return points_; }

private:
    std::vector<EvalPoint> points_;
};

/// [A_{l+2}]_{n,k} = C(k, n) alpha^(l (k - n)) with A_0 = I_{N,K}, A_1 = J_{N,K}.
/// alpha defaults to the field's designated primitive element.
Family construct_pascal(std::size_t L, std::size_t N, std::size_t K, const FieldPtr& field,
                        std::optional<Element> alpha = std::nullopt);
Family construct_pascal(std::size_t L, std::size_t N, std::size_t K, std::uint64_t q,
                        std::optional<Element> alpha = std::nullopt);

/// Row-modified Pascal family for N = K = p^m, entries
/// prod_h k_h^(n_h) alpha^(l (k_h - n_h) p^h) over the radix-p digits, 0^0 = 1.
Family construct_monomial_variant(std::size_t L, std::size_t N, const FieldPtr& field,
                                  std::optional<Element> alpha = std::nullopt);

/// The (q+2, 1, 3, q) family over a field of characteristic 2.
Family construct_q_plus_2(const FieldPtr& field);

/// Visits every admissible pattern once in lexicographic order.
void for_each_pattern(std::size_t L, std::size_t N, std::size_t K, PatternMode mode,
                      const std::function<void(const ErasurePattern&)>& visit);
std::vector<ErasurePattern> enumerate_patterns(std::size_t L, std::size_t N, std::size_t K,
                                               PatternMode mode);

/// Stacks the first v_l rows of every A_l.
Matrix stacked_matrix(const Family& family, const ErasurePattern& v);

struct VerifyOptions {
    PatternMode mode = PatternMode::exact;
    unsigned jobs = 1;
};

struct VerificationReport {
    bool passed = false;
    std::size_t patterns_checked = 0;
    std::size_t failures = 0;
    std::optional<ErasurePattern> first_failure;  // lexicographically smallest
    std::optional<Matrix> failing_matrix;
};

VerificationReport verify(const Family& family, const VerifyOptions& options = {});

/// Upper bound on L for which (L, N, K, q) families can exist.
struct LBound {
    enum class Kind { finite, unbounded, unknown };
    Kind kind;
    std::uint64_t value = 0;  // meaningful for finite only
    std::string citation;
};

LBound max_L_bound(std::size_t N, std::size_t K, std::uint64_t q);
std::string to_string(const LBound& b);

/// True iff every K x K submatrix of the L x K matrix of zeroth rows is
/// nonsingular. Requires L >= K.
bool check_mds_zeroth_rows(const Family& family);

}  // namespace udm

#endif  // UDM_FAMILY_HPP

#ifndef UDM_CODEC_HPP
#define UDM_CODEC_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "udm/family.hpp"

namespace udm {

/// Information vector u of length K, identified with u(L) = sum_k u_k L^k.
using InfoVector = std::vector<Element>;

/// What arrives over the L parallel channels: for each channel an unerased
/// prefix of the transmitted length-N vector; the rest is erased.
class ChannelOutput {
public:
    ChannelOutput(std::size_t N, std::vector<std::vector<Element>> prefixes);

    std::size_t L() const { return prefixes_.size(); }
    std::size_t N() const { return N_; }
    const std::vector<Element>& received(std::size_t l) const { return prefixes_[l]; }
    ErasurePattern pattern() const;

    friend bool operator==(const ChannelOutput&, const ChannelOutput&) = default;

private:
    std::size_t N_;
    std::vector<std::vector<Element>> prefixes_;
};

/// x_l = A_l u
std::vector<Vector> encode_matrix(const Family& family, const InfoVector& u);

/// [x_l]_n = u^(n)(beta_l), the Taylor coefficients of u(L) around beta_l.
std::vector<Vector> encode_taylor(const FieldPtr& field, const InfoVector& u,
                                  const BetaSequence& betas, std::size_t N);

ChannelOutput channel_erase(const std::vector<Vector>& x, const ErasurePattern& v);

/// Lowers v_{L-1}, then v_{L-2}, ... until the total is K.
ErasurePattern trim_pattern(const ErasurePattern& v, std::size_t K);

/// Uniform sampler over the admissible patterns with sum exactly K or at
/// least K. Counts are exact; throws if they overflow 128 bits.
class PatternSampler {
public:
    PatternSampler(std::size_t L, std::size_t N, std::size_t K, PatternMode mode);

    ErasurePattern operator()(std::mt19937_64& rng) const;
    unsigned __int128 population() const { return total_; }

private:
    std::size_t L_, N_, K_;
    PatternMode mode_;
    // ways_[l][s]: patterns for channels l..L-1 summing to s
    std::vector<std::vector<unsigned __int128>> ways_;
    unsigned __int128 total_ = 0;
};

ErasurePattern sample_pattern(std::size_t L, std::size_t N, std::size_t K, std::uint64_t seed,
                              PatternMode mode = PatternMode::exact);

InfoVector random_info(const Field& field, std::size_t K, std::mt19937_64& rng);

struct NewtonStep {
    std::size_t channel;
    std::size_t n;
    Element delta;
    Poly h;
    Poly g;
};

/// Per-invocation instrumentation of a decoder run.
struct DecoderTrace {
    std::uint64_t field_ops = 0;  // multiplications plus inversions
    std::uint64_t field_muls = 0;
    bool keep_steps = false;
    bool check_invariants = false;
    std::vector<NewtonStep> steps;
};

/// Stacks the received rows (trimmed to K) and solves by Gaussian
/// elimination. DecodeError when fewer than K symbols arrived or the
/// stacked matrix is singular.
InfoVector decode_gaussian(const Family& family, const ChannelOutput& out,
                           DecoderTrace* trace = nullptr);

/// Newton-interpolation decoder for Pascal families in O(K^2) field
/// operations. Symbols from the infinity channel fix the top coefficients
/// directly; their contribution is subtracted from the finite-channel
/// symbols before interpolating the rest.
InfoVector decode_newton(const FieldPtr& field, const ChannelOutput& out,
                         const BetaSequence& betas, std::size_t K,
                         DecoderTrace* trace = nullptr);

struct OpProfileRow {
    std::size_t K;
    double gaussian_ops;  // multiplications plus inversions
    double newton_ops;
    double gaussian_muls;
    double newton_muls;
};

/// Mean counted field operations of both decoders on Pascal (L, K, K, q)
/// families over random patterns and information vectors.
std::vector<OpProfileRow> op_count_profile(const std::vector<std::size_t>& Ks, std::size_t trials,
                                           std::uint64_t seed, std::uint64_t q = 127,
                                           std::size_t L = 8);

}  // namespace udm

#endif  // UDM_CODEC_HPP

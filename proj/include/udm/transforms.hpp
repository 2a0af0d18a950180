#ifndef UDM_TRANSFORMS_HPP
#define UDM_TRANSFORMS_HPP

#include <vector>

#include "udm/family.hpp"

namespace udm {

/// Replaces A_l by C A_l for lower-triangular C with non-zero diagonal.
Family row_transform(const Family& family, std::size_t l, const Matrix& C);

/// Replaces every A_l by A_l B for an invertible K x K matrix B.
Family col_transform(const Family& family, const Matrix& B);

/// New A_i is old A_{sigma[i]}.
Family permute(const Family& family, const std::vector<std::size_t>& sigma);

/// m-fold Kronecker power of every matrix. Whether the result is again a
/// UDM family depends on the input; Pascal families over prime fields are.
Family tensor_power(const Family& family, std::size_t m);

/// Row-replacement procedure making, for each pair (A_{2i}, A_{2i+1}), row n
/// of the first equal to row K-1-n of the second for K-N <= n <= N-1. Every
/// step only rescales a row and adds multiples of earlier rows, so the UDM
/// property is kept. A trailing unpaired matrix is passed through.
Family pair_reversal(const Family& family);

/// True iff the mirror relation above holds between matrices a and b.
bool rows_mirrored(const Matrix& a, const Matrix& b, std::size_t N, std::size_t K);

/// Equivalent family with A_0 = I_{N,K} and A_1 = J_{N,K}, obtained by a
/// single column transform. Idempotent.
Family normalize_leading_pair(const Family& family);

/// (L, N, K) -> (L, N-1, K-1): A_1 loses its first column, every other
/// matrix its last column; all lose their last row. Needs the zeroth row of
/// A_1 to be (0, ..., 0, 1).
Family reduce(const Family& family);

}  // namespace udm

#endif  // UDM_TRANSFORMS_HPP

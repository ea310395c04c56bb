#pragma once

#include <cstddef>
#include <utility>

#include "sqap/matrix.hpp"

namespace sqap {

/// Orthonormal Sylvester Hadamard matrix: every entry is +-1/sqrt(order)
/// and H * H^T = I. Construct via build_hadamard only.
struct HadamardMatrix {
    std::size_t order = 0;
    Matrix data;
};

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Sylvester recursion H_{2n} = [[H_n, H_n], [H_n, -H_n]], scaled by
/// 1/sqrt(order). Throws NotPowerOfTwo unless order is a power of two in
/// [1, 4096].
HadamardMatrix build_hadamard(std::size_t order);

/// In-place m := H_r * m where r = m.rows, computed with the fast
/// Walsh-Hadamard butterfly (Sylvester ordering) and a final 1/sqrt(r)
/// scale. Exact-arithmetic equal to matmul(H.data, m).
void apply_hadamard(Matrix& m);

/// (H*W, H*X): orthonormal rotation of a weight/activation pair that leaves
/// W^T X unchanged in exact arithmetic while flattening per-channel energy.
/// Throws DimensionMismatch unless W.rows == X.rows == H.order.
std::pair<Matrix, Matrix> rotate_pair(const Matrix& w, const Matrix& x,
                                      const HadamardMatrix& h);

} // namespace sqap

#include "sqap/hadamard.hpp"

#include <cmath>
#include <string>

namespace sqap {

HadamardMatrix build_hadamard(std::size_t order) {
    if (!is_power_of_two(order) || order > 4096)
        throw NotPowerOfTwo("build_hadamard: order " + std::to_string(order) +
                            " is not a power of two in [1, 4096]");
    // Signs by Sylvester doubling, then one global scale so every entry has
    // magnitude exactly 1/sqrt(order).
    Matrix m(order, order);
    m(0, 0) = 1.0;
    for (std::size_t n = 1; n < order; n <<= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double s = m(i, j);
                m(i, j + n) = s;
                m(i + n, j) = s;
                m(i + n, j + n) = -s;
            }
        }
    }
    const double inv = 1.0 / std::sqrt(static_cast<double>(order));
    for (double& v : m.data) v *= inv;
    return HadamardMatrix{order, std::move(m)};
}

void apply_hadamard(Matrix& m) {
    const std::size_t n = m.rows;
    if (!is_power_of_two(n))
        throw NotPowerOfTwo("apply_hadamard: rows " + std::to_string(n) +
                            " is not a power of two");
    const std::size_t stride = m.cols;
    double* base = m.data.data();
    for (std::size_t len = 1; len < n; len <<= 1) {
        for (std::size_t i = 0; i < n; i += len << 1) {
            for (std::size_t r = i; r < i + len; ++r) {
                double* top = base + r * stride;
                double* bot = base + (r + len) * stride;
                for (std::size_t j = 0; j < stride; ++j) {
                    const double u = top[j];
                    const double v = bot[j];
                    top[j] = u + v;
                    bot[j] = u - v;
                }
            }
        }
    }
    const double inv = 1.0 / std::sqrt(static_cast<double>(n));
    for (double& v : m.data) v *= inv;
}

std::pair<Matrix, Matrix> rotate_pair(const Matrix& w, const Matrix& x,
                                      const HadamardMatrix& h) {
    if (w.rows != h.order || x.rows != h.order)
        throw DimensionMismatch("rotate_pair: W has " + std::to_string(w.rows) +
                                " rows, X has " + std::to_string(x.rows) +
                                " rows, H has order " + std::to_string(h.order));
    Matrix wr = w;
    Matrix xr = x;
    apply_hadamard(wr);
    apply_hadamard(xr);
    return {std::move(wr), std::move(xr)};
}

} // namespace sqap

#pragma once

#include <cstddef>
#include <vector>

#include "sqap/errors.hpp"
#include "sqap/rng.hpp"

namespace sqap {

/// Dense real matrix, row-major, 64-bit floats. Plain value type: copyable,
/// immutable by convention once handed to an operation.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data; // rows * cols entries, row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    /// i.i.d. standard normal entries, filled in row-major order.
    static Matrix gaussian(std::size_t r, std::size_t c, Rng& rng) {
        Matrix m(r, c);
        for (double& v : m.data) v = rng.normal();
        return m;
    }
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

/// max_ij |a_ij - b_ij|; DimensionMismatch if shapes differ.
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs(const Matrix& a);

bool all_finite(const Matrix& a);

} // namespace sqap

#pragma once

#include <cstdint>
#include <vector>

#include "sqap/matrix.hpp"

namespace sqap {

enum class Granularity { PerTensor, PerToken, PerChannel };
enum class QuantTarget { Weight, Activation };

/// Symmetric uniform quantizer parameters. Codes live on the symmetric grid
/// [-(2^{bits-1}-1), 2^{bits-1}-1]; scales are positive reals, one per group.
/// Groups: PerTensor = whole matrix, PerChannel = one row (feature channel),
/// PerToken = one column (token); PerToken applies to activations only.
struct QuantSpec {
    int bits = 4;
    Granularity granularity = Granularity::PerTensor;
    QuantTarget target = QuantTarget::Activation;

    int qmax() const { return (1 << (bits - 1)) - 1; }
    void validate() const;
};

struct QuantizedTensor {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int32_t> codes; // row-major, same shape as the source
    std::vector<double> scales;      // one per group
    QuantSpec spec;
};

/// Round to nearest, ties to even. Deterministic across platforms.
double round_half_even(double v);

/// scale_g = max|x_g| / qmax (1.0 for all-zero groups);
/// code = clamp(round_half_even(x / scale_g), -qmax, qmax).
QuantizedTensor quantize(const Matrix& x, const QuantSpec& spec);

/// entry = code * scale of its group.
Matrix dequantize(const QuantizedTensor& q);

/// dequantize(quantize(x, spec)): the simulated low-bit value of x.
Matrix fake_quant(const Matrix& x, const QuantSpec& spec);

struct QuantErrorStats {
    double mse = 0.0;
    double max_abs = 0.0;
};

/// MSE and max-abs of fake_quant(x) - x.
QuantErrorStats quant_error_stats(const Matrix& x, const QuantSpec& spec);

} // namespace sqap

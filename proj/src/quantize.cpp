#include "sqap/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sqap {

void QuantSpec::validate() const {
    if (bits < 2 || bits > 16)
        throw InvalidSpec("QuantSpec: bits must be in [2, 16], got " + std::to_string(bits));
    if (granularity == Granularity::PerToken && target != QuantTarget::Activation)
        throw GranularityMismatch("QuantSpec: PerToken granularity is only valid for activations");
}

double round_half_even(double v) {
    const double f = std::floor(v);
    const double frac = v - f;
    if (frac > 0.5) return f + 1.0;
    if (frac < 0.5) return f;
    return (std::fmod(f, 2.0) == 0.0) ? f : f + 1.0;
}

namespace {

// Group index of entry (r, c) under the spec's granularity.
inline std::size_t group_of(const QuantSpec& spec, std::size_t r, std::size_t c) {
    switch (spec.granularity) {
        case Granularity::PerTensor: return 0;
        case Granularity::PerChannel: return r;
        case Granularity::PerToken: return c;
    }
    return 0;
}

inline std::size_t group_count(const QuantSpec& spec, const Matrix& x) {
    switch (spec.granularity) {
        case Granularity::PerTensor: return 1;
        case Granularity::PerChannel: return x.rows;
        case Granularity::PerToken: return x.cols;
    }
    return 1;
}

} // namespace

QuantizedTensor quantize(const Matrix& x, const QuantSpec& spec) {
    spec.validate();
    if (!all_finite(x)) throw NonFiniteInput("quantize: input has non-finite entries");

    QuantizedTensor q;
    q.rows = x.rows;
    q.cols = x.cols;
    q.spec = spec;
    q.scales.assign(group_count(spec, x), 0.0);
    q.codes.assign(x.data.size(), 0);

    for (std::size_t r = 0; r < x.rows; ++r)
        for (std::size_t c = 0; c < x.cols; ++c) {
            double& s = q.scales[group_of(spec, r, c)];
            s = std::max(s, std::fabs(x(r, c)));
        }
    const double qmax = static_cast<double>(spec.qmax());
    for (double& s : q.scales) s = (s == 0.0) ? 1.0 : s / qmax;

    for (std::size_t r = 0; r < x.rows; ++r)
        for (std::size_t c = 0; c < x.cols; ++c) {
            const double scale = q.scales[group_of(spec, r, c)];
            double code = round_half_even(x(r, c) / scale);
            code = std::clamp(code, -qmax, qmax);
            q.codes[r * x.cols + c] = static_cast<std::int32_t>(code);
        }
    return q;
}

Matrix dequantize(const QuantizedTensor& q) {
    Matrix x(q.rows, q.cols);
    for (std::size_t r = 0; r < q.rows; ++r)
        for (std::size_t c = 0; c < q.cols; ++c) {
            const double scale = q.scales[group_of(q.spec, r, c)];
            x(r, c) = static_cast<double>(q.codes[r * q.cols + c]) * scale;
        }
    return x;
}

Matrix fake_quant(const Matrix& x, const QuantSpec& spec) {
    return dequantize(quantize(x, spec));
}

QuantErrorStats quant_error_stats(const Matrix& x, const QuantSpec& spec) {
    const Matrix fq = fake_quant(x, spec);
    QuantErrorStats stats;
    for (std::size_t i = 0; i < x.data.size(); ++i) {
        const double e = fq.data[i] - x.data[i];
        stats.mse += e * e;
        stats.max_abs = std::max(stats.max_abs, std::fabs(e));
    }
    if (!x.data.empty()) stats.mse /= static_cast<double>(x.data.size());
    return stats;
}

} // namespace sqap

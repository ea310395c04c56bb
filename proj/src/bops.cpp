#include "sqap/bops.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sqap/errors.hpp"

namespace sqap {

namespace {

using u128 = unsigned __int128;

std::uint64_t narrow(u128 v, const char* what) {
    if (v > std::numeric_limits<std::uint64_t>::max())
        throw OverflowError(std::string(what) + ": BOPs count exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

} // namespace

void ModelDims::validate() const {
    if (d_model == 0 || n_layers == 0 || d_ff == 0 || n_text_tokens == 0 ||
        n_visual_tokens == 0)
        throw InvalidSpec("ModelDims: all dims must be positive");
}

std::uint64_t matmul_bops(std::uint64_t m, std::uint64_t k, std::uint64_t n,
                          int bits_w, int bits_a) {
    if (m == 0 || k == 0 || n == 0 || bits_w <= 0 || bits_a <= 0)
        throw InvalidSpec("matmul_bops: all arguments must be positive");
    const u128 macs = u128(m) * k * n;
    return narrow(macs * static_cast<unsigned>(bits_w) * static_cast<unsigned>(bits_a),
                  "matmul_bops");
}

std::uint64_t prefill_bops(const ModelDims& dims, std::uint64_t seq_len,
                           int bits_w, int bits_a) {
    dims.validate();
    if (seq_len == 0) throw InvalidSpec("prefill_bops: seq_len must be positive");
    const std::uint64_t s = seq_len;
    const std::uint64_t d = dims.d_model;
    u128 layer = 0;
    layer += u128(4) * matmul_bops(s, d, d, bits_w, bits_a);       // Q, K, V, O projections
    layer += u128(2) * matmul_bops(s, s, d, bits_a, bits_a);       // scores + attn * V
    layer += u128(2) * matmul_bops(s, d, dims.d_ff, bits_w, bits_a); // FFN up + down
    return narrow(layer * dims.n_layers, "prefill_bops");
}

BopsReport speedup_decomposition(const ModelDims& dims, double ratio,
                                 int bits_w, int bits_a) {
    dims.validate();
    if (!(ratio >= 0.0 && ratio < 1.0))
        throw InvalidSpec("speedup_decomposition: ratio must be in [0, 1)");

    const std::uint64_t retained = static_cast<std::uint64_t>(
        std::llround((1.0 - ratio) * static_cast<double>(dims.n_visual_tokens)));
    const std::uint64_t s_full = dims.n_text_tokens + dims.n_visual_tokens;
    const std::uint64_t s_pruned = dims.n_text_tokens + retained;

    BopsReport report;
    report.baseline_bops = prefill_bops(dims, s_full, 16, 16);
    report.quantized_bops = prefill_bops(dims, s_full, bits_w, bits_a);
    report.pruned_bops = prefill_bops(dims, s_pruned, 16, 16);
    report.combined_bops = prefill_bops(dims, s_pruned, bits_w, bits_a);

    const double base = static_cast<double>(report.baseline_bops);
    report.quant_ratio = static_cast<double>(report.quantized_bops) / base;
    report.prune_ratio = static_cast<double>(report.pruned_bops) / base;
    report.combined_ratio = static_cast<double>(report.combined_bops) / base;
    report.quant_speedup = base / static_cast<double>(report.quantized_bops);
    report.prune_speedup = base / static_cast<double>(report.pruned_bops);
    report.combined_speedup = base / static_cast<double>(report.combined_bops);
    return report;
}

} // namespace sqap

#pragma once

#include <cstdint>

namespace sqap {

/// Backbone shape for the prefill cost model. Sequence length is
/// n_text_tokens (instruction + query slots) plus the visual tokens that
/// survive pruning.
struct ModelDims {
    std::uint64_t d_model = 0;
    std::uint64_t n_layers = 0;
    std::uint64_t d_ff = 0;
    std::uint64_t n_text_tokens = 0;
    std::uint64_t n_visual_tokens = 0;

    void validate() const;
};

/// BOPs of an m x k x n matmul: MACs * bits_w * bits_a. Throws OverflowError
/// if the count exceeds 64 bits (computed in 128-bit arithmetic).
std::uint64_t matmul_bops(std::uint64_t m, std::uint64_t k, std::uint64_t n,
                          int bits_w, int bits_a);

/// Per layer: QKVO projections (4 s*d*d at bits_w x bits_a), attention
/// score + value (2 s*s*d at bits_a x bits_a), FFN (2 s*d*d_ff at
/// bits_w x bits_a); summed over n_layers.
std::uint64_t prefill_bops(const ModelDims& dims, std::uint64_t seq_len,
                           int bits_w, int bits_a);

struct BopsReport {
    std::uint64_t baseline_bops = 0;  // 16-bit, full token set
    std::uint64_t quantized_bops = 0; // low-bit, full token set
    std::uint64_t pruned_bops = 0;    // 16-bit, pruned token set
    std::uint64_t combined_bops = 0;  // low-bit, pruned token set
    double quant_ratio = 1.0;
    double prune_ratio = 1.0;
    double combined_ratio = 1.0;
    double quant_speedup = 1.0;
    double prune_speedup = 1.0;
    double combined_speedup = 1.0;
};

/// Decompose the BOPs saving into its quantization and pruning factors.
/// `ratio` is the visual-token pruning ratio in [0, 1).
BopsReport speedup_decomposition(const ModelDims& dims, double ratio,
                                 int bits_w, int bits_a);

} // namespace sqap

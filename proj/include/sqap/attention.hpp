#pragma once

#include <cstdint>
#include <vector>

#include "sqap/matrix.hpp"
#include "sqap/quantize.hpp"

namespace sqap {

enum class Regime { FullPrecision, QuantNaive, QuantHadamard };

/// Single-head, single-layer attention path. X is d x (n_visual + 1): the
/// visual tokens plus one task-query column at query_index (the last column
/// by default). QuantHadamard requires d_model to be a power of two.
struct AttentionConfig {
    std::size_t d_model = 0;
    std::size_t n_visual = 0;
    std::size_t query_index = 0; // column of the task-query token
    Regime regime = Regime::FullPrecision;
    QuantSpec quant_spec_w{4, Granularity::PerChannel, QuantTarget::Weight};
    QuantSpec quant_spec_a{4, Granularity::PerTensor, QuantTarget::Activation};

    void validate() const;
};

struct AttentionVector {
    std::vector<double> scores;
    bool normalized = false;
};

/// Indices of the k largest values; ties break toward the lower index.
/// Returned sorted ascending. Throws KTooLarge if k > scores.size().
std::vector<std::int32_t> topk_indices(const std::vector<double>& scores, std::size_t k);

/// Pre-softmax scores (q . k_i / sqrt(d)) of the task-query token against
/// each visual token, under the regime's weight/activation processing.
std::vector<double> attention_logits(const Matrix& wq, const Matrix& wk,
                                     const Matrix& x, const AttentionConfig& cfg);

/// Softmax of attention_logits: the task-query attention vector a_q.
AttentionVector compute_attention(const Matrix& wq, const Matrix& wk,
                                  const Matrix& x, const AttentionConfig& cfg);

struct DistortionMetrics {
    double topk_jaccard = 0.0;
    double rank_corr = 0.0;
    double entropy_delta = 0.0;
};

/// How far a quantized attention vector drifted from the full-precision one:
/// top-k set overlap (shift), Spearman rank correlation over the full
/// vectors, and entropy change in nats (scatter).
DistortionMetrics distortion_metrics(const AttentionVector& fp, const AttentionVector& q,
                                     std::size_t k);

} // namespace sqap

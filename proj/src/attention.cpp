#include "sqap/attention.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sqap/hadamard.hpp"

namespace sqap {

void AttentionConfig::validate() const {
    if (n_visual < 4)
        throw InvalidSpec("AttentionConfig: n_visual must be >= 4");
    if (query_index > n_visual)
        throw InvalidSpec("AttentionConfig: query_index must be within the token columns");
    if (regime == Regime::QuantHadamard && !is_power_of_two(d_model))
        throw NotPowerOfTwo("AttentionConfig: QuantHadamard requires power-of-two d_model");
    quant_spec_w.validate();
    quant_spec_a.validate();
}

std::vector<std::int32_t> topk_indices(const std::vector<double>& scores, std::size_t k) {
    if (k > scores.size())
        throw KTooLarge("topk_indices: k = " + std::to_string(k) + " > " +
                        std::to_string(scores.size()));
    std::vector<std::int32_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });
    order.resize(k);
    std::sort(order.begin(), order.end());
    return order;
}

std::vector<double> attention_logits(const Matrix& wq, const Matrix& wk,
                                     const Matrix& x, const AttentionConfig& cfg) {
    cfg.validate();
    const std::size_t d = cfg.d_model;
    if (wq.rows != d || wq.cols != d || wk.rows != d || wk.cols != d)
        throw DimensionMismatch("attention_logits: Wq/Wk must be d x d");
    if (x.rows != d || x.cols != cfg.n_visual + 1)
        throw DimensionMismatch("attention_logits: X must be d x (n_visual + 1)");

    Matrix wq_eff = wq;
    Matrix wk_eff = wk;
    Matrix x_eff = x;
    if (cfg.regime == Regime::QuantHadamard) {
        // Rotate the whole projection pair before quantizing; W'^T X' = W^T X
        // in exact arithmetic, so only the quantization error changes.
        apply_hadamard(wq_eff);
        apply_hadamard(wk_eff);
        apply_hadamard(x_eff);
    }
    if (cfg.regime != Regime::FullPrecision) {
        wq_eff = fake_quant(wq_eff, cfg.quant_spec_w);
        wk_eff = fake_quant(wk_eff, cfg.quant_spec_w);
        x_eff = fake_quant(x_eff, cfg.quant_spec_a);
    }

    // q = Wq^T x_query (one column).
    std::vector<double> q(d, 0.0);
    for (std::size_t r = 0; r < d; ++r) {
        const double xq = x_eff(r, cfg.query_index);
        const double* wrow = &wq_eff.data[r * d];
        for (std::size_t c = 0; c < d; ++c) q[c] += wrow[c] * xq;
    }
    // q . (Wk^T x_i) = (Wk q) . x_i, so one d x d product serves every key.
    std::vector<double> z(d, 0.0);
    for (std::size_t r = 0; r < d; ++r) {
        const double* wrow = &wk_eff.data[r * d];
        double acc = 0.0;
        for (std::size_t c = 0; c < d; ++c) acc += wrow[c] * q[c];
        z[r] = acc;
    }

    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<double> logits(cfg.n_visual, 0.0);
    for (std::size_t i = 0; i < cfg.n_visual; ++i) {
        const std::size_t col = (i < cfg.query_index) ? i : i + 1;
        double dot = 0.0;
        for (std::size_t r = 0; r < d; ++r) dot += z[r] * x_eff(r, col);
        logits[i] = dot * inv_sqrt_d;
    }
    return logits;
}

AttentionVector compute_attention(const Matrix& wq, const Matrix& wk,
                                  const Matrix& x, const AttentionConfig& cfg) {
    std::vector<double> logits = attention_logits(wq, wk, x, cfg);
    const double m = *std::max_element(logits.begin(), logits.end());
    double sum = 0.0;
    for (double& v : logits) {
        v = std::exp(v - m);
        sum += v;
    }
    for (double& v : logits) v /= sum;
    return AttentionVector{std::move(logits), true};
}

namespace {

// Fractional ranks (1-based, ties averaged).
std::vector<double> ranks_of(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::int32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::int32_t a, std::int32_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = avg;
        i = j + 1;
    }
    return ranks;
}

double entropy_nats(const std::vector<double>& p) {
    double h = 0.0;
    for (double v : p)
        if (v > 0.0) h -= v * std::log(v);
    return h;
}

} // namespace

DistortionMetrics distortion_metrics(const AttentionVector& fp, const AttentionVector& q,
                                     std::size_t k) {
    if (fp.scores.size() != q.scores.size())
        throw LengthMismatch("distortion_metrics: vectors differ in length");
    if (!fp.normalized || !q.normalized)
        throw InvalidSpec("distortion_metrics: inputs must be normalized attention vectors");
    const std::size_t n = fp.scores.size();
    if (k < 1 || k > n)
        throw KTooLarge("distortion_metrics: k out of [1, n]");

    DistortionMetrics m;

    const auto top_fp = topk_indices(fp.scores, k);
    const auto top_q = topk_indices(q.scores, k);
    std::vector<std::int32_t> inter;
    std::set_intersection(top_fp.begin(), top_fp.end(), top_q.begin(), top_q.end(),
                          std::back_inserter(inter));
    const double uni = static_cast<double>(top_fp.size() + top_q.size() - inter.size());
    m.topk_jaccard = uni == 0.0 ? 1.0 : static_cast<double>(inter.size()) / uni;

    const auto ra = ranks_of(fp.scores);
    const auto rb = ranks_of(q.scores);
    const double mean = 0.5 * static_cast<double>(n + 1);
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = ra[i] - mean;
        const double db = rb[i] - mean;
        cov += da * db;
        va += da * da;
        vb += db * db;
    }
    if (va == 0.0 || vb == 0.0) {
        // A constant vector has no ordering; call it perfectly correlated
        // only when both rank vectors coincide.
        m.rank_corr = (ra == rb) ? 1.0 : 0.0;
    } else {
        m.rank_corr = cov / std::sqrt(va * vb);
    }

    m.entropy_delta = entropy_nats(q.scores) - entropy_nats(fp.scores);
    return m;
}

} // namespace sqap

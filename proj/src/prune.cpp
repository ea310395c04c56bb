#include "sqap/prune.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace sqap {

void PruneConfig::validate() const {
    // ratio 0 is the explicit no-prune boundary; 1 would retain nothing.
    if (!(ratio >= 0.0 && ratio < 1.0))
        throw InvalidSpec("PruneConfig: ratio must be in [0, 1)");
    if (ring_radius < 0) throw InvalidSpec("PruneConfig: ring_radius must be >= 0");
    if (!(attn_fraction >= 0.0 && attn_fraction <= 1.0))
        throw InvalidSpec("PruneConfig: attn_fraction must be in [0, 1]");
    for (double v : world_point)
        if (!std::isfinite(v)) throw InvalidSpec("PruneConfig: world_point must be finite");
}

IndexSet topk_preserve(const AttentionVector& a_q, std::size_t k) {
    return topk_indices(a_q.scores, k);
}

IndexSet fps_sample(const IndexSet& candidates, const TokenGrid& grid,
                    const IndexSet& anchors, std::size_t m) {
    grid.validate();
    if (m > candidates.size())
        throw MTooLarge("fps_sample: m = " + std::to_string(m) + " > " +
                        std::to_string(candidates.size()) + " candidates");
    if (sets_intersect(candidates, anchors))
        throw InvalidSpec("fps_sample: candidates and anchors overlap");

    const auto coord = [&](std::int32_t flat) {
        return std::pair<int, int>{flat % grid.grid_w, flat / grid.grid_w};
    };
    const auto sqdist = [&](std::int32_t a, std::int32_t b) {
        const auto [au, av] = coord(a);
        const auto [bu, bv] = coord(b);
        const std::int64_t du = au - bu;
        const std::int64_t dv = av - bv;
        return du * du + dv * dv;
    };

    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> min_d(candidates.size(), kInf);
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::int32_t a : anchors)
            min_d[i] = std::min(min_d[i], sqdist(candidates[i], a));

    std::vector<bool> taken(candidates.size(), false);
    IndexSet picked;
    picked.reserve(m);
    for (std::size_t step = 0; step < m; ++step) {
        // candidates are sorted ascending, so a strict > keeps the lowest
        // flat index among ties (and the lowest candidate when all are inf).
        std::size_t best = candidates.size();
        std::int64_t best_d = -1;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (taken[i]) continue;
            if (min_d[i] > best_d) {
                best_d = min_d[i];
                best = i;
            }
        }
        taken[best] = true;
        picked.push_back(candidates[best]);
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (taken[i]) continue;
            min_d[i] = std::min(min_d[i], sqdist(candidates[i], candidates[best]));
        }
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

BudgetSplit allocate_budget(const PruneConfig& cfg, std::size_t n_visual,
                            std::size_t ring_size) {
    cfg.validate();
    BudgetSplit split;
    split.retain = static_cast<std::size_t>(
        std::llround((1.0 - cfg.ratio) * static_cast<double>(n_visual)));
    if (ring_size > split.retain)
        throw BudgetTooSmall("allocate_budget: ring of " + std::to_string(ring_size) +
                             " exceeds retain budget " + std::to_string(split.retain));
    const std::size_t free = split.retain - ring_size;
    split.k = static_cast<std::size_t>(std::floor(cfg.attn_fraction * static_cast<double>(free)));
    split.m_initial = free - split.k;
    return split;
}

namespace {

IndexSet all_tokens(std::size_t n) {
    IndexSet out(n);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

// Top scores restricted to tokens outside `excluded`, exactly `want` of them.
IndexSet topk_excluding(const AttentionVector& a_q, const IndexSet& excluded,
                        std::size_t want) {
    std::vector<std::int32_t> order(a_q.scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        if (a_q.scores[a] != a_q.scores[b]) return a_q.scores[a] > a_q.scores[b];
        return a < b;
    });
    IndexSet out;
    for (std::int32_t idx : order) {
        if (out.size() == want) break;
        if (!set_contains(excluded, idx)) out.push_back(idx);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

PruneResult prune_tokens(const AttentionVector& a_q, const CameraModel& cam,
                         const TokenGrid& grid, const PruneConfig& cfg,
                         AblationMode mode) {
    grid.validate();
    const std::size_t n_visual = grid.n_visual();
    if (a_q.scores.size() != n_visual)
        throw LengthMismatch("prune_tokens: attention vector length " +
                             std::to_string(a_q.scores.size()) + " != n_visual " +
                             std::to_string(n_visual));

    PruneResult result;

    if (mode != AblationMode::AttnOnly) {
        const auto center = try_project_world_to_token(cam, cfg.world_point, grid);
        result.projection_ok = center.has_value();
        if (center) result.ring_set = ring_tokens(*center, cfg.ring_radius, grid);
    }

    const BudgetSplit budget = allocate_budget(cfg, n_visual, result.ring_set.size());
    result.retain = budget.retain;

    switch (mode) {
        case AblationMode::AttnOnly: {
            result.attn_set = topk_preserve(a_q, budget.retain);
            result.final_set = result.attn_set;
            break;
        }
        case AblationMode::AttnRing: {
            result.attn_set =
                topk_excluding(a_q, result.ring_set, budget.retain - result.ring_set.size());
            result.final_set = set_union(result.attn_set, result.ring_set);
            break;
        }
        case AblationMode::Full: {
            const IndexSet top = topk_preserve(a_q, budget.k);
            result.attn_set = set_difference(top, result.ring_set);
            const IndexSet kept = set_union(result.attn_set, result.ring_set);
            // Quota freed by attn/ring overlap flows to FPS so the final
            // count stays exact.
            const std::size_t m = budget.retain - kept.size();
            const IndexSet remain = set_difference(all_tokens(n_visual), kept);
            result.fps_set = fps_sample(remain, grid, kept, m);
            result.final_set = set_union(kept, result.fps_set);
            break;
        }
    }
    return result;
}

} // namespace sqap

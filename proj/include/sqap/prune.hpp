#pragma once

#include <array>
#include <cstdint>

#include "sqap/attention.hpp"
#include "sqap/geometry.hpp"

namespace sqap {

/// Token budget parameters. `ratio` is the fraction of visual tokens pruned;
/// `attn_fraction` is the share of the free budget (after the ring) given to
/// top-k attention preservation, the rest going to spatial sampling.
struct PruneConfig {
    double ratio = 0.4;
    int ring_radius = 1;
    double attn_fraction = 0.5;
    std::array<double, 3> world_point{0.0, 0.0, 1.0};

    void validate() const;
};

/// Which selection strategies participate; the retained budget is identical
/// across the ladder so steps differ only in membership.
enum class AblationMode { AttnOnly, AttnRing, Full };

struct PruneResult {
    IndexSet attn_set;
    IndexSet ring_set;
    IndexSet fps_set;
    IndexSet final_set;
    std::size_t retain = 0;
    bool projection_ok = true; // false => ring budget was folded into attn/fps
};

/// Indices of the k largest attention scores (ties toward the lower index).
IndexSet topk_preserve(const AttentionVector& a_q, std::size_t k);

/// Greedy farthest-point sampling of exactly m candidates in the token-grid
/// Euclidean metric. A candidate's distance is its minimum distance to
/// (anchors union already-selected); ties break toward the lower flat index,
/// and with no anchors the first pick is the lowest-index candidate.
IndexSet fps_sample(const IndexSet& candidates, const TokenGrid& grid,
                    const IndexSet& anchors, std::size_t m);

struct BudgetSplit {
    std::size_t retain = 0;
    std::size_t k = 0;
    std::size_t m_initial = 0;
};

/// retain = round((1 - ratio) * n_visual); free = retain - ring_size;
/// k = floor(attn_fraction * free); m_initial = free - k.
/// Throws BudgetTooSmall if the ring alone exceeds the retain budget.
BudgetSplit allocate_budget(const PruneConfig& cfg, std::size_t n_visual,
                            std::size_t ring_size);

/// Compose the three selection strategies into a retained set of exactly
/// `retain` tokens. If the robot projection fails (behind camera or out of
/// frame) the ring is empty and its budget flows to attn/fps via
/// attn_fraction; the result records this in projection_ok.
PruneResult prune_tokens(const AttentionVector& a_q, const CameraModel& cam,
                         const TokenGrid& grid, const PruneConfig& cfg,
                         AblationMode mode = AblationMode::Full);

} // namespace sqap

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sqap/matrix.hpp"

namespace sqap {

/// Pinhole camera: intrinsic K (3x3, K[2][2] = 1), extrinsic [R|t] with R
/// orthonormal within 1e-9, and the image extent in pixels.
struct CameraModel {
    Matrix intrinsic;  // 3x3
    Matrix rotation;   // 3x3
    std::array<double, 3> translation{0.0, 0.0, 0.0};
    int image_width = 0;
    int image_height = 0;

    void validate() const;
};

/// Patch-token lattice over the image: grid_w x grid_h tokens of
/// patch_w x patch_h pixels each; grid dims x patch dims must equal the
/// image dims of the camera in use.
struct TokenGrid {
    int patch_w = 0;
    int patch_h = 0;
    int grid_w = 0;
    int grid_h = 0;

    std::size_t n_visual() const { return static_cast<std::size_t>(grid_w) * grid_h; }
    void validate() const;
};

struct TokenCoord {
    int t_u = 0;
    int t_v = 0;

    std::int32_t flat(const TokenGrid& grid) const { return t_v * grid.grid_w + t_u; }
    bool operator==(const TokenCoord&) const = default;
};

/// Sorted, duplicate-free visual-token indices.
using IndexSet = std::vector<std::int32_t>;

IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);
bool sets_intersect(const IndexSet& a, const IndexSet& b);
bool set_contains(const IndexSet& a, std::int32_t v);

/// World point -> pixel (u, v) via lambda [u v 1]^T = K [R|t] [x y z 1]^T,
/// then token (floor(u / P_w), floor(v / P_h)). Throws BehindCamera when the
/// depth lambda <= 0 and OutOfFrame when (u, v) lands outside the image.
TokenCoord project_world_to_token(const CameraModel& cam, const std::array<double, 3>& point,
                                  const TokenGrid& grid);

/// project_world_to_token with the two expected failures mapped to nullopt.
std::optional<TokenCoord> try_project_world_to_token(const CameraModel& cam,
                                                     const std::array<double, 3>& point,
                                                     const TokenGrid& grid);

/// All tokens within Chebyshev distance `radius` of `center`, clipped to the
/// grid, as sorted flat indices.
IndexSet ring_tokens(const TokenCoord& center, int radius, const TokenGrid& grid);

} // namespace sqap

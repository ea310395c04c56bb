#include "sqap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sqap {

void CameraModel::validate() const {
    if (intrinsic.rows != 3 || intrinsic.cols != 3 || rotation.rows != 3 || rotation.cols != 3)
        throw InvalidSpec("CameraModel: K and R must be 3x3");
    if (intrinsic(2, 2) != 1.0)
        throw InvalidSpec("CameraModel: K[2][2] must be 1");
    if (image_width <= 0 || image_height <= 0)
        throw InvalidSpec("CameraModel: image dims must be positive");
    const Matrix rrt = matmul(rotation, transpose(rotation));
    if (max_abs_diff(rrt, Matrix::identity(3)) > 1e-9)
        throw InvalidSpec("CameraModel: rotation is not orthonormal within 1e-9");
}

void TokenGrid::validate() const {
    if (patch_w <= 0 || patch_h <= 0 || grid_w <= 0 || grid_h <= 0)
        throw InvalidSpec("TokenGrid: all dims must be positive");
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool sets_intersect(const IndexSet& a, const IndexSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else return true;
    }
    return false;
}

bool set_contains(const IndexSet& a, std::int32_t v) {
    return std::binary_search(a.begin(), a.end(), v);
}

TokenCoord project_world_to_token(const CameraModel& cam, const std::array<double, 3>& point,
                                  const TokenGrid& grid) {
    cam.validate();
    grid.validate();
    if (grid.grid_w * grid.patch_w != cam.image_width ||
        grid.grid_h * grid.patch_h != cam.image_height)
        throw InvalidSpec("project_world_to_token: grid x patch dims do not match the image");

    // camera frame: p_c = R p + t, then homogeneous pixel y = K p_c
    double pc[3];
    for (int r = 0; r < 3; ++r) {
        pc[r] = cam.translation[r];
        for (int c = 0; c < 3; ++c) pc[r] += cam.rotation(r, c) * point[c];
    }
    double y[3];
    for (int r = 0; r < 3; ++r) {
        y[r] = 0.0;
        for (int c = 0; c < 3; ++c) y[r] += cam.intrinsic(r, c) * pc[c];
    }
    const double lambda = y[2];
    if (lambda <= 0.0)
        throw BehindCamera("project_world_to_token: depth " + std::to_string(lambda));
    const double u = y[0] / lambda;
    const double v = y[1] / lambda;
    if (u < 0.0 || u >= cam.image_width || v < 0.0 || v >= cam.image_height)
        throw OutOfFrame("project_world_to_token: pixel (" + std::to_string(u) + ", " +
                         std::to_string(v) + ") outside the image");

    return TokenCoord{static_cast<int>(std::floor(u / grid.patch_w)),
                      static_cast<int>(std::floor(v / grid.patch_h))};
}

std::optional<TokenCoord> try_project_world_to_token(const CameraModel& cam,
                                                     const std::array<double, 3>& point,
                                                     const TokenGrid& grid) {
    try {
        return project_world_to_token(cam, point, grid);
    } catch (const BehindCamera&) {
        return std::nullopt;
    } catch (const OutOfFrame&) {
        return std::nullopt;
    }
}

IndexSet ring_tokens(const TokenCoord& center, int radius, const TokenGrid& grid) {
    grid.validate();
    IndexSet out;
    const int v0 = std::max(0, center.t_v - radius);
    const int v1 = std::min(grid.grid_h - 1, center.t_v + radius);
    const int u0 = std::max(0, center.t_u - radius);
    const int u1 = std::min(grid.grid_w - 1, center.t_u + radius);
    for (int v = v0; v <= v1; ++v)
        for (int u = u0; u <= u1; ++u) out.push_back(v * grid.grid_w + u);
    return out; // (v, u) loop order is already ascending flat order
}

} // namespace sqap

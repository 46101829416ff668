#pragma once

#include "latentdrive/image.hpp"
#include "latentdrive/worldsim.hpp"

namespace latentdrive::sim {

// All three renderers work in the ego frame: ego at the image centre (lidar,
// mask) or bottom edge (camera), heading up. Pixel (row, col) of an
// ego-centric grid covers the square whose centre is returned by grid_point.

/// Ego-frame point (x right, y forward) at the centre of pixel (row, col).
Vec2 grid_point(const EnvConfig& config, int row, int col);

/// 2D ray-cast lidar: red where a ray first hits a vehicle box, green for ground
/// returns along each ray up to its hit, blue for the planned route.
Image render_lidar(const MapSpec& map, const EnvConfig& config, const EnvState& state);

/// Front-facing pseudo-perspective view of road, markings and vehicles.
Image render_camera(const MapSpec& map, const EnvConfig& config, const EnvState& state);

/// Ego-frame point sampled by camera pixel (row, col).
Vec2 camera_point(const EnvConfig& config, int row, int col);

/// Bird's-eye semantic mask, painted map < routing < objects < ego.
Image render_mask(const MapSpec& map, const EnvConfig& config, const EnvState& state);

namespace colors {
inline constexpr float kDrivable[3] = {0.4f, 0.4f, 0.4f};
inline constexpr float kMarking[3] = {0.9f, 0.9f, 0.9f};
inline constexpr float kRoute[3] = {0.0f, 0.0f, 1.0f};
inline constexpr float kObject[3] = {0.0f, 1.0f, 0.0f};
inline constexpr float kEgo[3] = {1.0f, 0.0f, 0.0f};
}  // namespace colors

}  // namespace latentdrive::sim

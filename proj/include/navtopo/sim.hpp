/*
 * Copyright 2026 The NavTopo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef NAVTOPO_SIM_HPP
#define NAVTOPO_SIM_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "navtopo/geom.hpp"
#include "navtopo/grid.hpp"

namespace navtopo {

/// Ground-truth scene: a grid with no unknown cells. Cells outside the
/// raster are treated as free, so an empty world is unbounded free space.
struct World {
  OccupancyGrid truth;
  std::string name;

  bool occupied_at(const Eigen::Vector2d& p) const {
    return truth.cell_at_coord(p) == Cell::kOccupied;
  }
};

struct LidarParams {
  int num_rays = 360;
  double max_range = 15.0;
  double fov = 2.0 * M_PI;
};

/// Odometry drift model: zero-mean Gaussian scaled by motion magnitude.
struct NoiseParams {
  double trans_sigma = 0.0;  // meters per meter traveled
  double rot_sigma = 0.0;    // radians per radian turned
  std::uint64_t seed = 0;
};

enum class MotionKind { kForward, kTurnLeft, kTurnRight, kStop };

struct MotionCommand {
  MotionKind kind = MotionKind::kStop;
  double magnitude = 0.0;  // meters or radians per tick

  static MotionCommand forward(double m) { return {MotionKind::kForward, m}; }
  static MotionCommand turn_left(double m) {
    return {MotionKind::kTurnLeft, m};
  }
  static MotionCommand turn_right(double m) {
    return {MotionKind::kTurnRight, m};
  }
  static MotionCommand stop() { return {MotionKind::kStop, 0.0}; }
};

struct PoseInObstacle : std::runtime_error {
  PoseInObstacle() : std::runtime_error("pose lies in an occupied cell") {}
};

/// One point per ray that hits an occupied cell within max_range, at the
/// first crossing into that cell (DDA cell walk on the truth grid).
/// Points are in the robot frame. Throws PoseInObstacle if the pose cell
/// is occupied.
Scan2D raycast_scan(const World& world, const Pose2D& pose,
                    const LidarParams& params);

/// Advances one tick. Forward motion is clamped just before the first
/// occupied cell on the swept segment; turns change theta only.
Pose2D step(const Pose2D& pose, const MotionCommand& cmd, const World& world);

/// Perturbs a true odometry delta. Deterministic given the rng state;
/// exact passthrough when both sigmas are zero.
Pose2D noisy_odometry(const Pose2D& true_delta, const NoiseParams& noise,
                      std::mt19937_64& rng);

}  // namespace navtopo

#endif  // NAVTOPO_SIM_HPP

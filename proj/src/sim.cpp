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

#include "navtopo/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace navtopo {

namespace {

// Walks grid cells along a ray with an Amanatides-Woo style traversal,
// in the grid's local frame. Calls visit(ix, iy, t_entry) for every cell
// after the starting one, in order, until visit returns false or the ray
// exceeds max_len. t_entry is the metric distance at which the segment
// enters the cell.
template <typename Visit>
void walk_cells(const OccupancyGrid& grid, const Eigen::Vector2d& start,
                const Eigen::Vector2d& dir, double max_len, Visit&& visit) {
  const double res = grid.resolution();
  const Pose2D inv_origin = inverse(grid.origin());
  const Eigen::Vector2d local = inv_origin.apply(start);
  const double c = std::cos(inv_origin.theta), s = std::sin(inv_origin.theta);
  const Eigen::Vector2d d(c * dir.x() - s * dir.y(),
                          s * dir.x() + c * dir.y());

  // Continuous cell coordinates: cell (ix, iy) spans [ix, ix + 1).
  double ux = local.x() / res + 0.5;
  double uy = local.y() / res + 0.5;
  int ix = static_cast<int>(std::floor(ux));
  int iy = static_cast<int>(std::floor(uy));

  const int step_x = d.x() > 0 ? 1 : (d.x() < 0 ? -1 : 0);
  const int step_y = d.y() > 0 ? 1 : (d.y() < 0 ? -1 : 0);
  const double inf = std::numeric_limits<double>::infinity();
  // Metric distance per cell crossed along each axis.
  const double dt_x = step_x != 0 ? res / std::abs(d.x()) : inf;
  const double dt_y = step_y != 0 ? res / std::abs(d.y()) : inf;
  // Metric distance to the first boundary crossing along each axis.
  double next_x = step_x != 0
                      ? ((step_x > 0 ? ix + 1 - ux : ux - ix) * res /
                         std::abs(d.x()))
                      : inf;
  double next_y = step_y != 0
                      ? ((step_y > 0 ? iy + 1 - uy : uy - iy) * res /
                         std::abs(d.y()))
                      : inf;

  double t = 0.0;
  while (true) {
    if (next_x <= next_y) {
      t = next_x;
      next_x += dt_x;
      ix += step_x;
    } else {
      t = next_y;
      next_y += dt_y;
      iy += step_y;
    }
    if (t > max_len) return;
    if (!visit(ix, iy, t)) return;
  }
}

}  // namespace

Scan2D raycast_scan(const World& world, const Pose2D& pose,
                    const LidarParams& params) {
  if (world.occupied_at(pose.translation())) throw PoseInObstacle();

  Scan2D scan;
  scan.max_range = params.max_range;
  scan.points.reserve(params.num_rays);

  const bool full_circle = params.fov >= 2.0 * M_PI - 1e-9;
  const Pose2D world_from_robot = pose;
  const Pose2D robot_from_world = inverse(pose);

  for (int i = 0; i < params.num_rays; ++i) {
    double ray_angle;
    if (params.num_rays == 1) {
      ray_angle = 0.0;
    } else if (full_circle) {
      ray_angle = -params.fov / 2.0 + i * params.fov / params.num_rays;
    } else {
      ray_angle = -params.fov / 2.0 + i * params.fov / (params.num_rays - 1);
    }
    const double heading = world_from_robot.theta + ray_angle;
    const Eigen::Vector2d dir(std::cos(heading), std::sin(heading));
    const Eigen::Vector2d start = world_from_robot.translation();

    double hit_t = -1.0;
    walk_cells(world.truth, start, dir, params.max_range,
               [&](int ix, int iy, double t) {
                 if (world.truth.at_or_unknown(ix, iy) == Cell::kOccupied) {
                   hit_t = t;
                   return false;
                 }
                 return true;
               });
    if (hit_t >= 0.0) {
      scan.points.push_back(robot_from_world.apply(start + hit_t * dir));
    }
  }
  return scan;
}

Pose2D step(const Pose2D& pose, const MotionCommand& cmd, const World& world) {
  switch (cmd.kind) {
    case MotionKind::kTurnLeft:
      return {pose.x, pose.y, pose.theta + cmd.magnitude};
    case MotionKind::kTurnRight:
      return {pose.x, pose.y, pose.theta - cmd.magnitude};
    case MotionKind::kStop:
      return pose;
    case MotionKind::kForward:
      break;
  }

  const Eigen::Vector2d dir(std::cos(pose.theta), std::sin(pose.theta));
  const Eigen::Vector2d start = pose.translation();
  double allowed = cmd.magnitude;
  walk_cells(world.truth, start, dir, cmd.magnitude,
             [&](int ix, int iy, double t) {
               if (world.truth.at_or_unknown(ix, iy) == Cell::kOccupied) {
                 // Stop half a cell short of the blocking cell; every
                 // point before t lies in already-visited free cells.
                 allowed = std::max(0.0, t - world.truth.resolution() / 2.0);
                 return false;
               }
               return true;
             });
  const Eigen::Vector2d end = start + allowed * dir;
  return {end.x(), end.y(), pose.theta};
}

Pose2D noisy_odometry(const Pose2D& true_delta, const NoiseParams& noise,
                      std::mt19937_64& rng) {
  const double trans_scale = noise.trans_sigma * translation_norm(true_delta);
  const double rot_scale = noise.rot_sigma * std::abs(true_delta.theta);
  double x = true_delta.x, y = true_delta.y, theta = true_delta.theta;
  if (trans_scale > 0.0) {
    std::normal_distribution<double> n(0.0, trans_scale);
    x += n(rng);
    y += n(rng);
  }
  if (rot_scale > 0.0) {
    std::normal_distribution<double> n(0.0, rot_scale);
    theta += n(rng);
  }
  return {x, y, theta};
}

}  // namespace navtopo

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

#ifndef NAVTOPO_GEOM_HPP
#define NAVTOPO_GEOM_HPP

#include <cmath>
#include <vector>

#include <Eigen/Core>

namespace navtopo {

// Convention used across the project: x forward, y left, theta
// counterclockwise. Angles live in (-pi, pi].

inline double normalize_angle(double theta) {
  double t = std::fmod(theta + M_PI, 2.0 * M_PI);
  if (t <= 0.0) t += 2.0 * M_PI;
  return t - M_PI;
}

/// Planar rigid transform. Also used as a pose: the transform maps
/// local coordinates into the parent frame.
struct Pose2D {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  Pose2D() = default;
  Pose2D(double x_, double y_, double theta_)
      : x(x_), y(y_), theta(normalize_angle(theta_)) {}

  static Pose2D identity() { return {}; }

  Eigen::Vector2d translation() const { return {x, y}; }

  /// Maps a point from this pose's frame into the parent frame.
  Eigen::Vector2d apply(const Eigen::Vector2d& p) const {
    const double c = std::cos(theta), s = std::sin(theta);
    return {x + c * p.x() - s * p.y(), y + s * p.x() + c * p.y()};
  }
};

/// Rigid transform "a then b".
inline Pose2D compose(const Pose2D& a, const Pose2D& b) {
  const double c = std::cos(a.theta), s = std::sin(a.theta);
  return {a.x + c * b.x - s * b.y, a.y + s * b.x + c * b.y,
          a.theta + b.theta};
}

inline Pose2D inverse(const Pose2D& p) {
  const double c = std::cos(p.theta), s = std::sin(p.theta);
  return {-(c * p.x + s * p.y), -(-s * p.x + c * p.y), -p.theta};
}

/// Length of the translation component; the edge weight of the
/// location graph. Ignores theta.
inline double translation_norm(const Pose2D& p) {
  return std::hypot(p.x, p.y);
}

/// 2D projection of one lidar sweep, in the sensor frame. Points are
/// ray endpoints only; rays that hit nothing leave no point. Point
/// order carries no meaning.
struct Scan2D {
  std::vector<Eigen::Vector2d> points;
  double max_range = 0.0;
};

/// Every point mapped by t; max_range unchanged.
inline Scan2D transform_scan(const Scan2D& s, const Pose2D& t) {
  Scan2D out;
  out.max_range = s.max_range;
  out.points.reserve(s.points.size());
  for (const auto& p : s.points) out.points.push_back(t.apply(p));
  return out;
}

}  // namespace navtopo

#endif  // NAVTOPO_GEOM_HPP

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

#ifndef NAVTOPO_GRID_HPP
#define NAVTOPO_GRID_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "navtopo/geom.hpp"

namespace navtopo {

enum class Cell : std::uint8_t { kFree = 0, kOccupied = 1, kUnknown = 2 };

/// Tri-state raster. `origin` is the pose of cell (0,0)'s center in the
/// grid's reference frame; cells are stored row-major (iy * width + ix).
/// Untouched cells are unknown.
class OccupancyGrid {
 public:
  OccupancyGrid() = default;
  OccupancyGrid(int width, int height, double resolution, const Pose2D& origin,
                Cell fill = Cell::kUnknown);

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }
  const Pose2D& origin() const { return origin_; }

  bool in_bounds(int ix, int iy) const {
    return ix >= 0 && ix < width_ && iy >= 0 && iy < height_;
  }

  Cell at(int ix, int iy) const { return cells_[iy * width_ + ix]; }
  void set(int ix, int iy, Cell c) { cells_[iy * width_ + ix] = c; }

  /// Out-of-bounds lookups are unknown.
  Cell at_or_unknown(int ix, int iy) const {
    return in_bounds(ix, iy) ? at(ix, iy) : Cell::kUnknown;
  }

  /// Center of cell (ix, iy) in the grid's reference frame.
  Eigen::Vector2d index_to_coord(int ix, int iy) const {
    return origin_.apply({ix * resolution_, iy * resolution_});
  }

  /// Cell whose center is nearest to p; may be out of bounds.
  Eigen::Vector2i coord_to_index(const Eigen::Vector2d& p) const;

  Cell cell_at_coord(const Eigen::Vector2d& p) const {
    const Eigen::Vector2i idx = coord_to_index(p);
    return at_or_unknown(idx.x(), idx.y());
  }

  std::size_t count(Cell c) const;

  /// Smallest sub-grid containing every non-unknown cell, with origin
  /// shifted so spatial content is unchanged. All-unknown grids crop to
  /// a single cell.
  OccupancyGrid cropped_to_observed() const;

  bool operator==(const OccupancyGrid& other) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  double resolution_ = 0.0;
  Pose2D origin_;
  std::vector<Cell> cells_;
};

// Text format: header `grid <width> <height> <resolution> <origin_x>
// <origin_y> <origin_theta>`, then `height` rows of `width` characters,
// '.' free / '#' occupied / '?' unknown, row iy = 0 first. Round-trips
// bit-exactly.
void save_grid(const OccupancyGrid& grid, std::ostream& out);
void save_grid_file(const OccupancyGrid& grid, const std::string& path);
OccupancyGrid load_grid(std::istream& in);
OccupancyGrid load_grid_file(const std::string& path);
std::string grid_to_string(const OccupancyGrid& grid);

}  // namespace navtopo

#endif  // NAVTOPO_GRID_HPP

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

#include "navtopo/grid.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace navtopo {

OccupancyGrid::OccupancyGrid(int width, int height, double resolution,
                             const Pose2D& origin, Cell fill)
    : width_(width),
      height_(height),
      resolution_(resolution),
      origin_(origin),
      cells_(static_cast<std::size_t>(width) * height, fill) {
  if (width < 1 || height < 1 || resolution <= 0.0) {
    throw std::invalid_argument("OccupancyGrid: bad dimensions");
  }
}

Eigen::Vector2i OccupancyGrid::coord_to_index(const Eigen::Vector2d& p) const {
  const Eigen::Vector2d local = inverse(origin_).apply(p);
  return {static_cast<int>(std::lround(local.x() / resolution_)),
          static_cast<int>(std::lround(local.y() / resolution_))};
}

std::size_t OccupancyGrid::count(Cell c) const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), c));
}

OccupancyGrid OccupancyGrid::cropped_to_observed() const {
  int min_x = width_, min_y = height_, max_x = -1, max_y = -1;
  for (int iy = 0; iy < height_; ++iy) {
    for (int ix = 0; ix < width_; ++ix) {
      if (at(ix, iy) == Cell::kUnknown) continue;
      min_x = std::min(min_x, ix);
      min_y = std::min(min_y, iy);
      max_x = std::max(max_x, ix);
      max_y = std::max(max_y, iy);
    }
  }
  if (max_x < 0) {
    min_x = min_y = 0;
    max_x = max_y = 0;
  }
  const Pose2D new_origin =
      compose(origin_, Pose2D(min_x * resolution_, min_y * resolution_, 0.0));
  OccupancyGrid out(max_x - min_x + 1, max_y - min_y + 1, resolution_,
                    new_origin);
  for (int iy = min_y; iy <= max_y; ++iy) {
    for (int ix = min_x; ix <= max_x; ++ix) {
      out.set(ix - min_x, iy - min_y, at(ix, iy));
    }
  }
  return out;
}

namespace {

char cell_to_char(Cell c) {
  switch (c) {
    case Cell::kFree:
      return '.';
    case Cell::kOccupied:
      return '#';
    default:
      return '?';
  }
}

Cell char_to_cell(char ch) {
  switch (ch) {
    case '.':
      return Cell::kFree;
    case '#':
      return Cell::kOccupied;
    case '?':
      return Cell::kUnknown;
    default:
      throw std::runtime_error(std::string("grid file: bad cell char '") + ch +
                               "'");
  }
}

// %.17g round-trips doubles exactly, so save/load/save is byte-stable.
std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void save_grid(const OccupancyGrid& grid, std::ostream& out) {
  out << "grid " << grid.width() << ' ' << grid.height() << ' '
      << fmt_double(grid.resolution()) << ' ' << fmt_double(grid.origin().x)
      << ' ' << fmt_double(grid.origin().y) << ' '
      << fmt_double(grid.origin().theta) << '\n';
  std::string row(static_cast<std::size_t>(grid.width()), '?');
  for (int iy = 0; iy < grid.height(); ++iy) {
    for (int ix = 0; ix < grid.width(); ++ix) {
      row[ix] = cell_to_char(grid.at(ix, iy));
    }
    out << row << '\n';
  }
}

OccupancyGrid load_grid(std::istream& in) {
  std::string tag;
  int width = 0, height = 0;
  double resolution = 0.0, ox = 0.0, oy = 0.0, otheta = 0.0;
  in >> tag >> width >> height >> resolution >> ox >> oy >> otheta;
  if (!in || tag != "grid") throw std::runtime_error("grid file: bad header");
  std::string line;
  std::getline(in, line);  // rest of header line
  OccupancyGrid grid(width, height, resolution, Pose2D(ox, oy, otheta));
  for (int iy = 0; iy < height; ++iy) {
    if (!std::getline(in, line) || static_cast<int>(line.size()) != width) {
      throw std::runtime_error("grid file: truncated row");
    }
    for (int ix = 0; ix < width; ++ix) {
      grid.set(ix, iy, char_to_cell(line[ix]));
    }
  }
  return grid;
}

void save_grid_file(const OccupancyGrid& grid, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  save_grid(grid, out);
}

OccupancyGrid load_grid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return load_grid(in);
}

std::string grid_to_string(const OccupancyGrid& grid) {
  std::ostringstream out;
  save_grid(grid, out);
  return out.str();
}

}  // namespace navtopo

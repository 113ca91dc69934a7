/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The pwenhance Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include "pwe/beamform/grid.hpp"
#include "pwe/common/key_value.hpp"

namespace pwe::metrics {

/// Axis-aligned pixel rectangle covering columns [x, x + width) and rows [y, y + height).
struct Rect {
  std::size_t x = 0, y = 0;
  std::size_t width = 0, height = 0;

  std::size_t area() const { return width * height; }
  /// Throws std::invalid_argument if empty or not inside a `image_width` x `image_height` image.
  void validate(std::size_t image_width, std::size_t image_height, const std::string& what) const;
  bool operator==(const Rect&) const = default;
};

/// Line segment between two pixel centres given as (column, row).
struct Segment {
  std::size_t x0 = 0, y0 = 0;
  std::size_t x1 = 0, y1 = 0;

  double length() const;
  /// Number of unit-spaced samples along the segment, end point included when it falls on the grid.
  std::size_t sample_count() const;
  void validate(std::size_t image_width, std::size_t image_height, const std::string& what) const;
  bool operator==(const Segment&) const = default;
};

struct RoiSet {
  Rect speckle_box;
  Rect hyper_box;
  Rect hypo_box;
  Segment fiber_segment;

  void validate(std::size_t image_width, std::size_t image_height) const;

  /// Keys: speckle_box, hyper_box, hypo_box as `x,y,width,height`; fiber_segment as `x0,y0,x1,y1`.
  KeyValueFile to_key_values() const;
  static RoiSet from_key_values(const KeyValueFile& kv);
  static RoiSet load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  bool operator==(const RoiSet&) const = default;
};

/// Pixel rectangle covering the physical window [lateral0, lateral1] x [axial0, axial1] (metres)
/// of an image sampled on `grid`.
Rect rect_from_physical(const bf::PixelGrid& grid, double lateral0, double lateral1, double axial0,
                        double axial1);

/// ROIs matching the standard phantom on `grid`: a background speckle box at 30 to 36 mm depth,
/// boxes inside the hyperechoic and hypoechoic inclusions, and an oblique segment in the background.
RoiSet standard_rois(const bf::PixelGrid& grid);

}  // namespace pwe::metrics

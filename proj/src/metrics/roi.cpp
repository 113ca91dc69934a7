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

#include "pwe/metrics/roi.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <fstream>

#include "pwe/common/error.hpp"

namespace pwe::metrics {

void Rect::validate(std::size_t image_width, std::size_t image_height, const std::string& what) const {
  if (width == 0 || height == 0) {
    throw std::invalid_argument(what + ": empty rectangle");
  }
  if (x + width > image_width || y + height > image_height) {
    std::ostringstream msg;
    msg << what << ": rectangle " << x << ',' << y << ',' << width << ',' << height
        << " exceeds " << image_width << 'x' << image_height << " image";
    throw std::invalid_argument(msg.str());
  }
}

double Segment::length() const {
  const double dx = static_cast<double>(x1) - static_cast<double>(x0);
  const double dy = static_cast<double>(y1) - static_cast<double>(y0);
  return std::hypot(dx, dy);
}

std::size_t Segment::sample_count() const {
  return static_cast<std::size_t>(std::floor(length() + 1e-12)) + 1;
}

void Segment::validate(std::size_t image_width, std::size_t image_height,
                       const std::string& what) const {
  if (std::max(x0, x1) >= image_width || std::max(y0, y1) >= image_height) {
    throw std::invalid_argument(what + ": segment leaves the image");
  }
  if (sample_count() < 2) {
    throw std::invalid_argument(what + ": segment shorter than one pixel");
  }
}

void RoiSet::validate(std::size_t image_width, std::size_t image_height) const {
  speckle_box.validate(image_width, image_height, "speckle_box");
  hyper_box.validate(image_width, image_height, "hyper_box");
  hypo_box.validate(image_width, image_height, "hypo_box");
  fiber_segment.validate(image_width, image_height, "fiber_segment");
}

namespace {

std::string join(std::initializer_list<std::size_t> values) {
  std::string out;
  for (std::size_t v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::vector<std::size_t> four_values(const KeyValueFile& kv, const std::string& key) {
  const std::vector<long long> raw = kv.get_int_list(key);
  if (raw.size() != 4) {
    throw FormatError(key + ": expected 4 integers, got " + std::to_string(raw.size()));
  }
  std::vector<std::size_t> out;
  for (long long v : raw) {
    if (v < 0) throw FormatError(key + ": negative coordinate");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

Rect rect_value(const KeyValueFile& kv, const std::string& key) {
  const auto v = four_values(kv, key);
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace

KeyValueFile RoiSet::to_key_values() const {
  KeyValueFile kv;
  for (const auto& [key, r] : {std::pair{"speckle_box", speckle_box}, std::pair{"hyper_box", hyper_box},
                               std::pair{"hypo_box", hypo_box}}) {
    kv.set(key, join({r.x, r.y, r.width, r.height}));
  }
  const Segment& s = fiber_segment;
  kv.set("fiber_segment", join({s.x0, s.y0, s.x1, s.y1}));
  return kv;
}

RoiSet RoiSet::from_key_values(const KeyValueFile& kv) {
  RoiSet rois;
  rois.speckle_box = rect_value(kv, "speckle_box");
  rois.hyper_box = rect_value(kv, "hyper_box");
  rois.hypo_box = rect_value(kv, "hypo_box");
  const auto s = four_values(kv, "fiber_segment");
  rois.fiber_segment = {s[0], s[1], s[2], s[3]};
  return rois;
}

RoiSet RoiSet::load(const std::filesystem::path& path) {
  return from_key_values(KeyValueFile::load(path));
}

void RoiSet::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# regions of interest in pixel coordinates\n" << to_key_values().to_string();
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Rect rect_from_physical(const bf::PixelGrid& grid, double lateral0, double lateral1, double axial0,
                        double axial1) {
  grid.validate();
  if (lateral1 <= lateral0 || axial1 <= axial0) {
    throw std::invalid_argument("rect_from_physical: empty window");
  }
  auto index_range = [](double lo, double hi, double origin, double step, std::size_t n) {
    const double a = std::ceil((lo - origin) / step - 1e-9);
    const double b = std::floor((hi - origin) / step + 1e-9);
    const double first = std::max(a, 0.0);
    const double last = std::min(b, static_cast<double>(n) - 1.0);
    if (last < first) throw std::invalid_argument("rect_from_physical: window outside grid");
    return std::pair{static_cast<std::size_t>(first), static_cast<std::size_t>(last - first) + 1};
  };
  const auto [x, w] =
      index_range(lateral0, lateral1, grid.lateral_min, grid.lateral_spacing(), grid.width);
  const auto [y, h] = index_range(axial0, axial1, grid.axial_min, grid.axial_spacing(), grid.height);
  return {x, y, w, h};
}

RoiSet standard_rois(const bf::PixelGrid& grid) {
  auto nearest = [&](double lateral, double axial) {
    const double c = std::round((lateral - grid.lateral_min) / grid.lateral_spacing());
    const double r = std::round((axial - grid.axial_min) / grid.axial_spacing());
    return std::pair{static_cast<std::size_t>(std::clamp(c, 0.0, grid.width - 1.0)),
                     static_cast<std::size_t>(std::clamp(r, 0.0, grid.height - 1.0))};
  };
  RoiSet rois;
  rois.speckle_box = rect_from_physical(grid, -0.005, 0.005, 0.030, 0.036);
  rois.hyper_box = rect_from_physical(grid, 0.006, 0.012, 0.019, 0.025);
  rois.hypo_box = rect_from_physical(grid, -0.012, -0.006, 0.019, 0.025);
  const auto [x0, y0] = nearest(-0.015, 0.008);
  const auto [x1, y1] = nearest(0.015, 0.013);
  rois.fiber_segment = {x0, y0, x1, y1};
  rois.validate(grid.width, grid.height);
  return rois;
}

}  // namespace pwe::metrics

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

#include <complex>
#include <cstddef>
#include <vector>

namespace pwe::bf {

/// Reconstruction grid. Columns run laterally, rows axially; both axes include their end points.
struct PixelGrid {
  double lateral_min = -0.02, lateral_max = 0.02;  // m
  double axial_min = 0.0, axial_max = 0.04;        // m
  std::size_t width = 97;
  std::size_t height = 191;

  void validate() const;
  double lateral(std::size_t col) const {
    return lateral_min + (lateral_max - lateral_min) * static_cast<double>(col) /
                             static_cast<double>(width - 1);
  }
  double axial(std::size_t row) const {
    return axial_min + (axial_max - axial_min) * static_cast<double>(row) /
                           static_cast<double>(height - 1);
  }
  double lateral_spacing() const { return (lateral_max - lateral_min) / (width - 1.0); }
  double axial_spacing() const { return (axial_max - axial_min) / (height - 1.0); }
  std::size_t size() const { return width * height; }

  /// Same physical extent sampled with a different pixel count.
  PixelGrid resampled(std::size_t new_width, std::size_t new_height) const;

  bool operator==(const PixelGrid&) const = default;
};

/// The 97 x 191 grid over 4 cm x 4 cm used for all plane-wave reconstructions.
inline PixelGrid default_grid() { return PixelGrid{}; }

/// Complex beamsum, row-major with rows along depth.
struct ComplexImage {
  PixelGrid grid;
  std::vector<std::complex<double>> values;
  double steer_angle = 0.0;

  explicit ComplexImage(const PixelGrid& g = {}, double angle = 0.0)
      : grid(g), values(g.size()), steer_angle(angle) {}

  std::complex<double>& at(std::size_t row, std::size_t col) { return values[row * grid.width + col]; }
  const std::complex<double>& at(std::size_t row, std::size_t col) const {
    return values[row * grid.width + col];
  }
};

}  // namespace pwe::bf

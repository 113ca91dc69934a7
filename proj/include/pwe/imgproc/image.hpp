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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "pwe/beamform/grid.hpp"

namespace pwe::img {

/// Dense row-major scalar image.
class Image {
 public:
  Image() = default;
  Image(std::size_t width, std::size_t height, double fill = 0.0)
      : width_(width), height_(height), data_(width * height, fill) {}
  Image(std::size_t width, std::size_t height, std::vector<double> data);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& at(std::size_t row, std::size_t col) { return data_[row * width_ + col]; }
  double at(std::size_t row, std::size_t col) const { return data_[row * width_ + col]; }
  std::span<double> row(std::size_t r) { return {data_.data() + r * width_, width_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * width_, width_}; }
  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  Image flipped_horizontally() const;
  bool same_shape(const Image& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }
  bool operator==(const Image&) const = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<double> data_;
};

enum class StageTag : std::uint8_t {
  plane_wave_input = 0,
  compounded = 1,
  filtered_ground_truth = 2,
  stage1_output = 3,
  stage2_output = 4,
  histogram_matched = 5,
};

std::string_view to_string(StageTag tag);

/// Display-ready image in [0, 1] with its physical extent.
struct BModeImage {
  Image pixels;
  bf::PixelGrid grid;
  StageTag tag = StageTag::plane_wave_input;

  BModeImage() = default;
  BModeImage(Image p, const bf::PixelGrid& g, StageTag t);

  /// Throws std::invalid_argument if pixels leave [0, 1] or disagree with the grid.
  void validate() const;
  std::size_t width() const { return pixels.width(); }
  std::size_t height() const { return pixels.height(); }
};

void clamp_unit(Image& image);

}  // namespace pwe::img

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

#include "pwe/imgproc/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pwe::img {

Image::Image(std::size_t width, std::size_t height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
  if (data_.size() != width * height) {
    throw std::invalid_argument("Image: data length " + std::to_string(data_.size()) +
                                " does not match " + std::to_string(width) + "x" +
                                std::to_string(height));
  }
}

Image Image::flipped_horizontally() const {
  Image out(width_, height_);
  for (std::size_t r = 0; r < height_; ++r) {
    for (std::size_t c = 0; c < width_; ++c) out.at(r, c) = at(r, width_ - 1 - c);
  }
  return out;
}

std::string_view to_string(StageTag tag) {
  switch (tag) {
    case StageTag::plane_wave_input: return "plane_wave_input";
    case StageTag::compounded: return "compounded";
    case StageTag::filtered_ground_truth: return "filtered_ground_truth";
    case StageTag::stage1_output: return "stage1_output";
    case StageTag::stage2_output: return "stage2_output";
    case StageTag::histogram_matched: return "histogram_matched";
  }
  return "unknown";
}

BModeImage::BModeImage(Image p, const bf::PixelGrid& g, StageTag t)
    : pixels(std::move(p)), grid(g), tag(t) {
  validate();
}

void BModeImage::validate() const {
  if (pixels.width() != grid.width || pixels.height() != grid.height) {
    throw std::invalid_argument("BModeImage: pixel dimensions do not match the grid");
  }
  for (double v : pixels.data()) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("BModeImage: pixel outside [0, 1]");
  }
}

void clamp_unit(Image& image) {
  for (double& v : image.data()) v = std::clamp(v, 0.0, 1.0);
}

}  // namespace pwe::img

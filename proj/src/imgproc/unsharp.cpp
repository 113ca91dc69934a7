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

#include "pwe/imgproc/unsharp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pwe/common/parallel.hpp"

namespace pwe::img {

std::vector<double> gaussian_half_kernel(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian blur: sigma must be positive");
  const auto radius = static_cast<std::size_t>(std::ceil(4.0 * sigma));
  std::vector<double> k(radius + 1);
  double total = 0.0;
  for (std::size_t i = 0; i <= radius; ++i) {
    k[i] = std::exp(-0.5 * static_cast<double>(i * i) / (sigma * sigma));
    total += (i == 0 ? 1.0 : 2.0) * k[i];
  }
  for (double& v : k) v /= total;
  return k;
}

namespace {

// Symmetric pairs are added before weighting, so mirrored inputs give identical outputs.
void blur_line(const double* in, double* out, std::ptrdiff_t n, std::ptrdiff_t stride,
               const std::vector<double>& k) {
  const auto radius = static_cast<std::ptrdiff_t>(k.size()) - 1;
  auto at = [&](std::ptrdiff_t i) { return in[std::clamp<std::ptrdiff_t>(i, 0, n - 1) * stride]; };
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double s = k[0] * at(i);
    for (std::ptrdiff_t d = 1; d <= radius; ++d) s += k[static_cast<std::size_t>(d)] * (at(i - d) + at(i + d));
    out[i * stride] = s;
  }
}

}  // namespace

Image gaussian_blur(const Image& image, double sigma) {
  const auto k = gaussian_half_kernel(sigma);
  const auto w = static_cast<std::ptrdiff_t>(image.width());
  const auto h = static_cast<std::ptrdiff_t>(image.height());
  Image tmp(image.width(), image.height());
  parallel_for(0, image.height(), [&](std::size_t first, std::size_t last) {
    for (std::size_t r = first; r < last; ++r) blur_line(image.row(r).data(), tmp.row(r).data(), w, 1, k);
  });
  Image out(image.width(), image.height());
  parallel_for(0, image.width(), [&](std::size_t first, std::size_t last) {
    for (std::size_t c = first; c < last; ++c) {
      blur_line(tmp.data().data() + c, out.data().data() + c, h, w, k);
    }
  });
  return out;
}

Image unsharp_enhance(const Image& image, double sigma, double amount) {
  if (!(amount >= 0.0)) throw std::invalid_argument("unsharp_mask: amount must be >= 0");
  if (amount == 0.0) {
    gaussian_half_kernel(sigma);  // still validates sigma
    return image;
  }
  const Image blurred = gaussian_blur(image, sigma);
  Image out(image.width(), image.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double v = image.data()[i];
    out.data()[i] = v + amount * (v - blurred.data()[i]);
  }
  return out;
}

BModeImage unsharp_mask(const BModeImage& image, double sigma, double amount) {
  Image out = unsharp_enhance(image.pixels, sigma, amount);
  clamp_unit(out);
  return BModeImage(std::move(out), image.grid, image.tag);
}

}  // namespace pwe::img

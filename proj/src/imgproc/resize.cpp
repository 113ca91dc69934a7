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

#include "pwe/imgproc/resize.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pwe/common/parallel.hpp"

namespace pwe::img {

namespace {

constexpr double kA = -0.5;

struct Taps {
  std::ptrdiff_t base = 0;  // index of the tap at offset -1
  double w[4] = {0, 0, 0, 0};
};

std::vector<Taps> make_taps(std::size_t n_in, std::size_t n_out) {
  std::vector<Taps> taps(n_out);
  const double scale =
      n_out > 1 ? static_cast<double>(n_in - 1) / static_cast<double>(n_out - 1) : 0.0;
  for (std::size_t i = 0; i < n_out; ++i) {
    const double pos = static_cast<double>(i) * scale;
    auto left = static_cast<std::ptrdiff_t>(std::floor(pos));
    if (left > static_cast<std::ptrdiff_t>(n_in) - 1) left = static_cast<std::ptrdiff_t>(n_in) - 1;
    const double t = pos - static_cast<double>(left);
    taps[i].base = left - 1;
    taps[i].w[0] = cubic_weight(1.0 + t);
    taps[i].w[1] = cubic_weight(t);
    taps[i].w[2] = cubic_weight(1.0 - t);
    taps[i].w[3] = cubic_weight(2.0 - t);
  }
  return taps;
}

// Sample with linear extrapolation beyond the ends.
inline double fetch(const double* v, std::ptrdiff_t n, std::ptrdiff_t stride, std::ptrdiff_t i) {
  if (i >= 0 && i < n) return v[i * stride];
  if (n == 1) return v[0];
  if (i < 0) {
    const double a = v[0], b = v[stride];
    return a + static_cast<double>(i) * (b - a);
  }
  const double a = v[(n - 2) * stride], b = v[(n - 1) * stride];
  return b + static_cast<double>(i - (n - 1)) * (b - a);
}

}  // namespace

double cubic_weight(double x) {
  x = std::abs(x);
  if (x <= 1.0) return ((kA + 2.0) * x - (kA + 3.0)) * x * x + 1.0;
  if (x < 2.0) return ((kA * x - 5.0 * kA) * x + 8.0 * kA) * x - 4.0 * kA;
  return 0.0;
}

Image bicubic_resize(const Image& image, std::size_t out_width, std::size_t out_height) {
  if (out_width < 2 || out_height < 2) {
    throw std::invalid_argument("bicubic_resize: output dimensions must be >= 2");
  }
  if (image.empty()) throw std::invalid_argument("bicubic_resize: empty input");
  const auto in_w = static_cast<std::ptrdiff_t>(image.width());
  const auto in_h = static_cast<std::ptrdiff_t>(image.height());
  const auto tx = make_taps(image.width(), out_width);
  const auto ty = make_taps(image.height(), out_height);

  Image horizontal(out_width, image.height());
  parallel_for(0, image.height(), [&](std::size_t first, std::size_t last) {
    for (std::size_t r = first; r < last; ++r) {
      const double* src = image.row(r).data();
      for (std::size_t c = 0; c < out_width; ++c) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k) s += tx[c].w[k] * fetch(src, in_w, 1, tx[c].base + k);
        horizontal.at(r, c) = s;
      }
    }
  });

  Image out(out_width, out_height);
  const auto stride = static_cast<std::ptrdiff_t>(out_width);
  parallel_for(0, out_height, [&](std::size_t first, std::size_t last) {
    for (std::size_t r = first; r < last; ++r) {
      for (std::size_t c = 0; c < out_width; ++c) {
        const double* col = horizontal.data().data() + c;
        double s = 0.0;
        for (int k = 0; k < 4; ++k) s += ty[r].w[k] * fetch(col, in_h, stride, ty[r].base + k);
        out.at(r, c) = s;
      }
    }
  });
  return out;
}

BModeImage bicubic_resize(const BModeImage& image, std::size_t out_width, std::size_t out_height) {
  Image pixels = bicubic_resize(image.pixels, out_width, out_height);
  clamp_unit(pixels);
  return BModeImage(std::move(pixels), image.grid.resampled(out_width, out_height), image.tag);
}

}  // namespace pwe::img

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

#include "pwe/imgproc/bmode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pwe::img {

Image envelope(const bf::ComplexImage& image) {
  Image out(image.grid.width, image.grid.height);
  for (std::size_t i = 0; i < image.values.size(); ++i) out.data()[i] = std::abs(image.values[i]);
  return out;
}

Image log_compress(const Image& envelope, double dynamic_range_db) {
  if (!(dynamic_range_db > 0.0)) throw std::invalid_argument("log_compress: dynamic range <= 0");
  double peak = 0.0;
  for (double v : envelope.data()) {
    if (v < 0.0) throw std::invalid_argument("log_compress: negative envelope value");
    peak = std::max(peak, v);
  }
  if (!(peak > 0.0)) throw std::invalid_argument("log_compress: all-zero envelope");

  Image out(envelope.width(), envelope.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double v = envelope.data()[i];
    const double db = v > 0.0 ? 20.0 * std::log10(v / peak) : -dynamic_range_db;
    out.data()[i] = std::clamp(db, -dynamic_range_db, 0.0) / dynamic_range_db + 1.0;
  }
  return out;
}

BModeImage to_bmode(const bf::ComplexImage& image, double dynamic_range_db, StageTag tag) {
  return BModeImage(log_compress(envelope(image), dynamic_range_db), image.grid, tag);
}

}  // namespace pwe::img

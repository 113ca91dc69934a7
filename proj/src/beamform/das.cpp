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

#include "pwe/beamform/das.hpp"

#include <cmath>
#include <stdexcept>

#include "pwe/beamform/hilbert.hpp"
#include "pwe/common/parallel.hpp"

namespace pwe::bf {

ApertureRange receive_aperture(const acq::TransducerGeometry& geometry, double x, double z,
                               double f_number) {
  const double half = z / (2.0 * f_number);
  ApertureRange r;
  bool found = false;
  for (std::size_t e = 0; e < geometry.element_count; ++e) {
    if (std::abs(x - geometry.element_x(e)) <= half) {
      if (!found) r.first = e;
      r.last = e;
      found = true;
    } else if (found) {
      break;
    }
  }
  if (!found) return {};
  return r;
}

ComplexImage das_beamform(const acq::RFFrame& frame, const PixelGrid& grid, double f_number) {
  if (!(f_number > 0.0)) throw std::invalid_argument("das_beamform: f_number must be positive");
  grid.validate();
  frame.validate();

  const auto& geo = frame.geometry;
  const std::size_t n = frame.sample_count;
  const auto analytic = analytic_channels(frame);
  const double c = geo.sound_speed;
  const double fs = geo.sampling_frequency;
  const double cos_t = std::cos(frame.steer_angle);
  const double sin_t = std::sin(frame.steer_angle);
  const double last_index = static_cast<double>(n) - 1.0;

  ComplexImage out(grid, frame.steer_angle);
  parallel_for(0, grid.height, [&](std::size_t first_row, std::size_t last_row) {
    for (std::size_t row = first_row; row < last_row; ++row) {
      const double z = grid.axial(row);
      for (std::size_t col = 0; col < grid.width; ++col) {
        const double x = grid.lateral(col);
        const ApertureRange ap = receive_aperture(geo, x, z, f_number);
        const double tau_tx = (z * cos_t + x * sin_t) / c;
        std::complex<double> sum{0.0, 0.0};
        for (std::size_t e = ap.first; e <= ap.last && !ap.empty(); ++e) {
          const double dx = x - geo.element_x(e);
          const double tau = tau_tx + std::sqrt(dx * dx + z * z) / c;
          const double s = (tau - frame.t0) * fs;
          if (!(s >= 0.0) || s > last_index) continue;
          const auto i0 = static_cast<std::size_t>(s);
          const double frac = s - static_cast<double>(i0);
          const std::complex<double>* ch = analytic.data() + e * n;
          const std::complex<double> v0 = ch[i0];
          const std::complex<double> v1 = (i0 + 1 < n) ? ch[i0 + 1] : v0;
          sum += v0 + frac * (v1 - v0);
        }
        out.at(row, col) = sum;
      }
    }
  });
  return out;
}

ComplexImage compound(std::span<const ComplexImage> images) {
  if (images.empty()) throw std::invalid_argument("compound: no images");
  const PixelGrid& grid = images.front().grid;
  for (const auto& img : images) {
    if (!(img.grid == grid)) throw std::invalid_argument("compound: images have different grids");
  }
  ComplexImage out(grid, 0.0);
  const double inv = 1.0 / static_cast<double>(images.size());
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    std::complex<double> sum{0.0, 0.0};
    for (const auto& img : images) sum += img.values[i];
    out.values[i] = sum * inv;
  }
  return out;
}

}  // namespace pwe::bf

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

#include "pwe/acq/simulate.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "pwe/common/parallel.hpp"

namespace pwe::acq {

namespace {
constexpr double kTruncationSigmas = 8.0;
}

double pulse_shape(const TransducerGeometry& geometry, double t) {
  const double s = geometry.pulse_sigma();
  return std::exp(-0.5 * t * t / (s * s)) *
         std::cos(2.0 * std::numbers::pi * geometry.center_frequency * t);
}

RFFrame simulate_rf(const TransducerGeometry& geometry, const ScattererField& field,
                    double steer_angle, const SimulationOptions& options) {
  geometry.validate();
  field.validate();
  if (!(std::abs(steer_angle) < kMaxSteerAngle)) {
    throw std::invalid_argument("simulate_rf: |steer_angle| must be below 30 degrees");
  }
  if (options.sample_count == 0) throw std::invalid_argument("simulate_rf: sample_count is zero");

  RFFrame frame;
  frame.geometry = geometry;
  frame.sample_count = options.sample_count;
  frame.steer_angle = steer_angle;
  frame.t0 = options.t0;
  frame.samples.assign(static_cast<std::size_t>(geometry.element_count) * options.sample_count,
                       0.0);

  const double c = geometry.sound_speed;
  const double fs = geometry.sampling_frequency;
  const double half_window = kTruncationSigmas * geometry.pulse_sigma();
  const double cos_t = std::cos(steer_angle);
  const double sin_t = std::sin(steer_angle);
  const auto n = static_cast<std::ptrdiff_t>(options.sample_count);

  // Elements are independent; within a channel scatterers are accumulated in field order.
  parallel_for(0, geometry.element_count, [&](std::size_t first, std::size_t last) {
    for (std::size_t e = first; e < last; ++e) {
      const double xe = geometry.element_x(e);
      auto row = frame.channel(e);
      for (std::size_t s = 0; s < field.size(); ++s) {
        const auto [x, z] = field.positions[s];
        const double dx = x - xe;
        const double t_center = (z * cos_t + x * sin_t + std::sqrt(dx * dx + z * z)) / c;
        const double amp = field.reflectivities[s];
        auto lo = static_cast<std::ptrdiff_t>(std::ceil((t_center - half_window - options.t0) * fs));
        auto hi = static_cast<std::ptrdiff_t>(std::floor((t_center + half_window - options.t0) * fs));
        lo = std::max<std::ptrdiff_t>(lo, 0);
        hi = std::min<std::ptrdiff_t>(hi, n - 1);
        for (std::ptrdiff_t i = lo; i <= hi; ++i) {
          const double t = options.t0 + static_cast<double>(i) / fs - t_center;
          row[static_cast<std::size_t>(i)] += amp * pulse_shape(geometry, t);
        }
      }
    }
  });

  if (options.noise_sigma > 0.0) add_noise(frame, options.noise_sigma, options.noise_seed);
  return frame;
}

void add_noise(RFFrame& frame, double sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  for (double& v : frame.samples) v += noise(rng);
}

}  // namespace pwe::acq

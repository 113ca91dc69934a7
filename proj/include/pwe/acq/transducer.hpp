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
#include <vector>

namespace pwe::acq {

/// Linear-array geometry. Defaults describe a 128-element, 5.2 MHz linear probe.
struct TransducerGeometry {
  std::uint32_t element_count = 128;
  double pitch = 0.298e-3;               // m
  double center_frequency = 5.208e6;     // Hz
  double sampling_frequency = 20.832e6;  // Hz
  double sound_speed = 1540.0;           // m/s
  double pulse_cycles = 2.0;

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;

  /// Lateral element position; the array is centred on x = 0.
  double element_x(std::size_t element) const {
    return (static_cast<double>(element) - 0.5 * (element_count - 1.0)) * pitch;
  }
  double wavelength() const { return sound_speed / center_frequency; }
  /// Standard deviation of the Gaussian pulse envelope in seconds.
  double pulse_sigma() const { return pulse_cycles / (2.0 * center_frequency); }

  bool operator==(const TransducerGeometry&) const = default;
};

struct Point2 {
  double lateral = 0.0;  // m
  double axial = 0.0;    // m, positive into the medium
};

/// Point scatterers. positions[i] carries amplitude reflectivities[i].
struct ScattererField {
  std::vector<Point2> positions;
  std::vector<double> reflectivities;

  void add(double lateral, double axial, double reflectivity) {
    positions.push_back({lateral, axial});
    reflectivities.push_back(reflectivity);
  }
  std::size_t size() const { return positions.size(); }
  bool empty() const { return positions.empty(); }
  void validate() const;

  /// Concatenation of both fields.
  static ScattererField merge(const ScattererField& a, const ScattererField& b);
};

/// Channel data of one plane-wave transmit, stored element-major.
struct RFFrame {
  TransducerGeometry geometry;
  std::size_t sample_count = 0;
  std::vector<double> samples;  // element_count * sample_count
  double steer_angle = 0.0;     // rad
  double t0 = 0.0;              // s, time of the first sample

  std::span<const double> channel(std::size_t element) const {
    return {samples.data() + element * sample_count, sample_count};
  }
  std::span<double> channel(std::size_t element) {
    return {samples.data() + element * sample_count, sample_count};
  }
  double sample_time(std::size_t index) const {
    return t0 + static_cast<double>(index) / geometry.sampling_frequency;
  }
  void validate() const;
};

}  // namespace pwe::acq

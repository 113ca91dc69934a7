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

#include "pwe/acq/phantoms.hpp"

#include <numbers>
#include <random>

namespace pwe::acq {

double degrees_to_radians(double deg) { return deg * std::numbers::pi / 180.0; }

ScattererField point_target(double lateral, double axial, double reflectivity) {
  ScattererField f;
  f.add(lateral, axial, reflectivity);
  return f;
}

ScattererField speckle_phantom(const SpeckleSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lat(spec.lateral_min, spec.lateral_max);
  std::uniform_real_distribution<double> ax(spec.axial_min, spec.axial_max);
  std::normal_distribution<double> amp(0.0, 1.0);
  const double area = (spec.lateral_max - spec.lateral_min) * (spec.axial_max - spec.axial_min);
  const auto count = static_cast<std::size_t>(spec.density * area);

  ScattererField f;
  f.positions.reserve(count);
  f.reflectivities.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = lat(rng);
    const double z = ax(rng);
    double a = amp(rng);
    for (const auto& inc : spec.inclusions) {
      const double dx = x - inc.center.lateral;
      const double dz = z - inc.center.axial;
      if (dx * dx + dz * dz <= inc.radius * inc.radius) a *= inc.gain;
    }
    f.add(x, z, a);
  }
  return f;
}

SpeckleSpec standard_phantom_spec() {
  SpeckleSpec spec;
  spec.inclusions.push_back({{-0.009, 0.022}, 0.006, 0.1});
  spec.inclusions.push_back({{0.009, 0.022}, 0.006, 3.0});
  return spec;
}

std::vector<RFFrame> acquire_sequence(const TransducerGeometry& geometry,
                                      const ScattererField& field,
                                      const PlaneWaveSequence& sequence,
                                      const SimulationOptions& options) {
  std::vector<RFFrame> frames;
  frames.reserve(sequence.angles_deg.size() * sequence.repeats);
  SimulationOptions clean = options;
  clean.noise_sigma = 0.0;
  std::uint64_t transmit = 0;
  for (double deg : sequence.angles_deg) {
    const RFFrame echo = simulate_rf(geometry, field, degrees_to_radians(deg), clean);
    for (std::size_t r = 0; r < sequence.repeats; ++r, ++transmit) {
      RFFrame frame = echo;
      if (options.noise_sigma > 0.0) {
        add_noise(frame, options.noise_sigma, options.noise_seed * 1000003ULL + transmit);
      }
      frames.push_back(std::move(frame));
    }
  }
  return frames;
}

}  // namespace pwe::acq

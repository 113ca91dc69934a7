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

#include <cstdint>
#include <vector>

#include "pwe/acq/transducer.hpp"

namespace pwe::acq {

struct SimulationOptions {
  std::size_t sample_count = 1400;  // covers 4 cm of depth at the default geometry
  double t0 = 0.0;
  /// Standard deviation of additive white Gaussian noise; zero disables noise.
  double noise_sigma = 0.0;
  std::uint64_t noise_seed = 0;
};

/// Maximum |steer_angle| accepted by simulate_rf (30 degrees).
inline constexpr double kMaxSteerAngle = 0.5235987755982988;

/// Analytic pulse-echo channel data for a plane-wave transmit.
///
/// A scatterer at (x, z) produces, at element e, the pulse exp(-t^2 / 2s^2) cos(2 pi fc t)
/// centred on t = [z cos(theta) + x sin(theta) + sqrt((x - x_e)^2 + z^2)] / c and scaled by
/// its reflectivity. The pulse is truncated at 8 s where its envelope is below 1e-13.
RFFrame simulate_rf(const TransducerGeometry& geometry, const ScattererField& field,
                    double steer_angle, const SimulationOptions& options = {});

/// The pulse shape used by simulate_rf, evaluated at time offset t from its centre.
double pulse_shape(const TransducerGeometry& geometry, double t);

/// Adds white Gaussian noise in place.
void add_noise(RFFrame& frame, double sigma, std::uint64_t seed);

}  // namespace pwe::acq

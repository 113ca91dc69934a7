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

#include "pwe/acq/simulate.hpp"
#include "pwe/acq/transducer.hpp"

namespace pwe::acq {

/// Circular inclusion whose scatterer amplitudes are multiplied by `gain`.
struct Inclusion {
  Point2 center;
  double radius = 0.0;  // m
  double gain = 1.0;
};

struct SpeckleSpec {
  double lateral_min = -0.02, lateral_max = 0.02;
  double axial_min = 0.002, axial_max = 0.040;
  double density = 10.0e6;  // scatterers per m^2
  std::vector<Inclusion> inclusions;
};

ScattererField point_target(double lateral, double axial, double reflectivity = 1.0);

/// Uniformly placed scatterers with Gaussian amplitudes.
ScattererField speckle_phantom(const SpeckleSpec& spec, std::uint64_t seed);

/// The muscle-like demo phantom: speckle background, a hypoechoic and a hyperechoic inclusion.
SpeckleSpec standard_phantom_spec();

/// Plane-wave acquisition: each angle is transmitted `repeats` times.
struct PlaneWaveSequence {
  std::vector<double> angles_deg{-3.0, 0.0, 3.0};
  std::size_t repeats = 4;
};

/// Simulates every transmit of `sequence` (angle-major order). Repeats of an angle share the
/// noise-free echo and differ only in their noise realisation.
std::vector<RFFrame> acquire_sequence(const TransducerGeometry& geometry,
                                      const ScattererField& field,
                                      const PlaneWaveSequence& sequence,
                                      const SimulationOptions& options);

double degrees_to_radians(double deg);

}  // namespace pwe::acq

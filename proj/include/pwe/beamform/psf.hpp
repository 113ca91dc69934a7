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
#include <span>

#include "pwe/beamform/grid.hpp"

namespace pwe::bf {

struct PeakLocation {
  std::size_t row = 0, col = 0;
  double lateral = 0.0, axial = 0.0;
  double magnitude = 0.0;
};

/// Pixel of maximum |value|.
PeakLocation find_peak(const ComplexImage& image);

/// Full width at a fraction of the peak (0.5 for -6 dB) of a sampled profile, in samples.
/// Crossings are located by linear interpolation between neighbouring samples.
double profile_width(std::span<const double> profile, double fraction = 0.5);

/// Lateral -6 dB width in metres of |image| along the row through its peak.
double lateral_fwhm(const ComplexImage& image);

}  // namespace pwe::bf

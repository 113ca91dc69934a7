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

#include "pwe/acq/transducer.hpp"
#include "pwe/beamform/grid.hpp"

namespace pwe::bf {

/// Receive F-number of the dynamic-focusing beamformer.
inline constexpr double kDefaultFNumber = 0.81;

/// Inclusive element range [first, last]; empty when first > last.
struct ApertureRange {
  std::size_t first = 1;
  std::size_t last = 0;
  bool empty() const { return first > last; }
  std::size_t size() const { return empty() ? 0 : last - first + 1; }
};

/// Elements with |x - x_e| <= z / (2 f_number).
ApertureRange receive_aperture(const acq::TransducerGeometry& geometry, double x, double z,
                               double f_number);

/// Plane-wave delay-and-sum with dynamic receive focusing and rectangular apodization.
///
/// Each pixel (x, z) sums the analytic channel signals at tau_tx + tau_rx(e) with
/// tau_tx = (z cos(theta) + x sin(theta)) / c and tau_rx(e) = sqrt((x - x_e)^2 + z^2) / c,
/// linearly interpolated between samples. Delays outside the recorded window contribute zero.
ComplexImage das_beamform(const acq::RFFrame& frame, const PixelGrid& grid,
                          double f_number = kDefaultFNumber);

/// Pixel-wise complex mean. All images must share one grid.
ComplexImage compound(std::span<const ComplexImage> images);

}  // namespace pwe::bf

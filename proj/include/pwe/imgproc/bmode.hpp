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

#include "pwe/beamform/grid.hpp"
#include "pwe/imgproc/image.hpp"

namespace pwe::img {

inline constexpr double kDefaultDynamicRangeDb = 60.0;

/// Pixel-wise magnitude of the complex beamsum.
Image envelope(const bf::ComplexImage& image);

/// v = clamp(20 log10(env / max(env)), -DR, 0) / DR + 1.
/// Throws std::invalid_argument for an all-zero envelope or a non-positive range.
Image log_compress(const Image& envelope, double dynamic_range_db = kDefaultDynamicRangeDb);

/// envelope -> log_compress wrapped with the beamforming grid.
BModeImage to_bmode(const bf::ComplexImage& image, double dynamic_range_db, StageTag tag);

}  // namespace pwe::img

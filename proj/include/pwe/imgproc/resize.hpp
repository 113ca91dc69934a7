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

#include "pwe/imgproc/image.hpp"

namespace pwe::img {

/// Catmull-Rom cubic (a = -0.5) weight.
double cubic_weight(double x);

/// Separable bicubic resampling with corner-aligned sample positions.
///
/// Output sample i maps to source position i (n_in - 1) / (n_out - 1), so source and output
/// share their end points. Kernel taps falling outside the source are extrapolated linearly
/// from the two nearest edge samples, which keeps constant and linear images exact up to the
/// border. The result is not clamped.
Image bicubic_resize(const Image& image, std::size_t out_width, std::size_t out_height);

/// As above, clamped to [0, 1]; the grid keeps its extent and takes the new pixel counts.
BModeImage bicubic_resize(const BModeImage& image, std::size_t out_width, std::size_t out_height);

}  // namespace pwe::img

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

#include <vector>

#include "pwe/imgproc/image.hpp"

namespace pwe::img {

/// Normalized Gaussian taps for offsets 0..ceil(4 sigma) (one side; the kernel is symmetric).
std::vector<double> gaussian_half_kernel(double sigma);

/// Separable Gaussian blur with edge replication, rows first.
Image gaussian_blur(const Image& image, double sigma);

/// img + amount (img - blur(img)), without clamping.
Image unsharp_enhance(const Image& image, double sigma, double amount);

/// unsharp_enhance clamped to [0, 1]. Requires sigma > 0 and amount >= 0.
BModeImage unsharp_mask(const BModeImage& image, double sigma, double amount);

}  // namespace pwe::img

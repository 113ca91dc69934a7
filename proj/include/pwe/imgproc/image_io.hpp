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

#include <filesystem>
#include <iosfwd>

#include "pwe/imgproc/image.hpp"

namespace pwe::img {

/// PWIM layout (little-endian):
///   "PWIM" | u32 version=1 | u32 width | u32 height |
///   f64 lateral_min | f64 lateral_max | f64 axial_min | f64 axial_max |
///   u8 stage_tag | f32 pixels[height][width]
inline constexpr std::uint32_t kImageFormatVersion = 1;

void write_pwim(std::ostream& out, const BModeImage& image);
BModeImage read_pwim(std::istream& in);
void save_pwim(const BModeImage& image, const std::filesystem::path& path);
BModeImage load_pwim(const std::filesystem::path& path);

/// Binary 8-bit portable graymap (P5); pixel = round(255 v).
void save_pgm(const Image& image, const std::filesystem::path& path);
/// Reads a P5 graymap with maxval <= 255, scaled to [0, 1].
Image load_pgm(const std::filesystem::path& path);

/// Rounds pixels to f32, i.e. what a PWIM save/load cycle yields.
void quantize_to_file_precision(Image& image);

}  // namespace pwe::img

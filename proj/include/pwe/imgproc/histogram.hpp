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

#include <array>
#include <cstdint>
#include <filesystem>

#include "pwe/imgproc/image.hpp"

namespace pwe::img {

inline constexpr std::size_t kHistogramBins = 256;

/// Bin of a [0, 1] intensity: floor(256 v), with 1.0 in the last bin.
std::size_t intensity_bin(double v);
/// Centre of a bin, (b + 0.5) / 256.
double bin_center(std::size_t bin);

/// Cumulative distribution over 256 uniform intensity bins.
struct ReferenceCdf {
  std::array<double, kHistogramBins> values{};

  /// Non-decreasing, within [0, 1], last value exactly 1.0.
  void validate() const;
  /// Empirical CDF of an image.
  static ReferenceCdf from_image(const Image& image);
  /// Smallest bin c with values[c] >= p.
  std::size_t inverse(double p) const;
  double median() const { return bin_center(inverse(0.5)); }
  bool operator==(const ReferenceCdf&) const = default;
};

/// Reference-CDF file: 256 little-endian f64 values.
void save_reference_cdf(const ReferenceCdf& cdf, const std::filesystem::path& path);
ReferenceCdf load_reference_cdf(const std::filesystem::path& path);

/// Template CDF of a log-compressed (60 dB) fully developed speckle phantom: 512 x 512
/// Rayleigh envelope samples drawn from a fixed seed. This is the default matching target.
ReferenceCdf rayleigh_reference_cdf();

/// Maps each pixel through G^-1(F(bin)), where F is the source CDF and G the reference CDF,
/// and writes the centre of the selected reference bin. The mapping is non-decreasing.
/// A constant source is filled with the reference median.
BModeImage histogram_match(const BModeImage& image, const ReferenceCdf& reference);

/// Matches against the empirical CDF of a reference image with at least two distinct values.
BModeImage histogram_match(const BModeImage& image, const BModeImage& reference);

/// The 256-entry lookup table used by histogram_match (source bin -> output intensity).
std::array<double, kHistogramBins> matching_table(const Image& source, const ReferenceCdf& reference);

}  // namespace pwe::img

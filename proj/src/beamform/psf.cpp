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

#include "pwe/beamform/psf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace pwe::bf {

PeakLocation find_peak(const ComplexImage& image) {
  PeakLocation p;
  p.magnitude = -1.0;
  for (std::size_t r = 0; r < image.grid.height; ++r) {
    for (std::size_t c = 0; c < image.grid.width; ++c) {
      const double m = std::abs(image.at(r, c));
      if (m > p.magnitude) {
        p.magnitude = m;
        p.row = r;
        p.col = c;
      }
    }
  }
  p.lateral = image.grid.lateral(p.col);
  p.axial = image.grid.axial(p.row);
  return p;
}

double profile_width(std::span<const double> profile, double fraction) {
  if (profile.size() < 2) throw std::invalid_argument("profile_width: profile too short");
  const auto peak_it = std::max_element(profile.begin(), profile.end());
  const auto peak = static_cast<std::size_t>(peak_it - profile.begin());
  const double level = fraction * *peak_it;

  double left = 0.0;
  std::size_t i = peak;
  while (i > 0 && profile[i - 1] > level) --i;
  if (i == 0) {
    left = 0.0;
  } else {
    const double a = profile[i - 1], b = profile[i];
    left = static_cast<double>(i - 1) + (level - a) / (b - a);
  }

  double right = 0.0;
  std::size_t j = peak;
  while (j + 1 < profile.size() && profile[j + 1] > level) ++j;
  if (j + 1 == profile.size()) {
    right = static_cast<double>(j);
  } else {
    const double a = profile[j], b = profile[j + 1];
    right = static_cast<double>(j) + (a - level) / (a - b);
  }
  return right - left;
}

double lateral_fwhm(const ComplexImage& image) {
  const PeakLocation p = find_peak(image);
  std::vector<double> row(image.grid.width);
  for (std::size_t c = 0; c < row.size(); ++c) row[c] = std::abs(image.at(p.row, c));
  return profile_width(row) * image.grid.lateral_spacing();
}

}  // namespace pwe::bf

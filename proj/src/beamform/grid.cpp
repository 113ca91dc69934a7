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

#include "pwe/beamform/grid.hpp"

#include <stdexcept>

namespace pwe::bf {

void PixelGrid::validate() const {
  if (!(lateral_max > lateral_min)) throw std::invalid_argument("grid: lateral_max <= lateral_min");
  if (!(axial_max > axial_min)) throw std::invalid_argument("grid: axial_max <= axial_min");
  if (width < 2 || height < 2) throw std::invalid_argument("grid: width and height must be >= 2");
}

PixelGrid PixelGrid::resampled(std::size_t new_width, std::size_t new_height) const {
  PixelGrid g = *this;
  g.width = new_width;
  g.height = new_height;
  g.validate();
  return g;
}

}  // namespace pwe::bf

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

#include "pwe/train/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pwe::train {

void LrSchedule::validate() const {
  if (rates.size() != boundaries.size() + 1) {
    throw std::invalid_argument("LrSchedule: need exactly one more rate than boundaries");
  }
  for (std::size_t i = 1; i < boundaries.size(); ++i) {
    if (boundaries[i] <= boundaries[i - 1]) {
      throw std::invalid_argument("LrSchedule: boundaries must be strictly increasing");
    }
  }
  for (double r : rates) {
    if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("LrSchedule: rates must be positive");
  }
}

double LrSchedule::rate_at(std::size_t step) const {
  validate();
  const auto it = std::upper_bound(boundaries.begin(), boundaries.end(), step);
  return rates[static_cast<std::size_t>(it - boundaries.begin())];
}

LrSchedule LrSchedule::scaled(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("LrSchedule: scale factor must be positive");
  LrSchedule s = *this;
  for (auto& b : s.boundaries) b = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(b * factor)));
  s.validate();
  return s;
}

LrSchedule LrSchedule::constant(double rate) { return {{}, {rate}}; }

LrSchedule LrSchedule::cyclegan_default() { return {{10000, 30000}, {1e-4, 5e-5, 1e-5}}; }

}  // namespace pwe::train

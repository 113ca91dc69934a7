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
#include <vector>

namespace pwe::train {

/// Piecewise-constant learning rate: rates[i] applies from boundaries[i-1] (inclusive) up to
/// boundaries[i].
struct LrSchedule {
  std::vector<std::size_t> boundaries;
  std::vector<double> rates;

  void validate() const;
  double rate_at(std::size_t step) const;
  /// Boundaries multiplied by `factor` (rounded), for shortened runs.
  LrSchedule scaled(double factor) const;

  static LrSchedule constant(double rate);
  /// 1e-4, then 5e-5 from step 10000, then 1e-5 from step 30000.
  static LrSchedule cyclegan_default();
};

}  // namespace pwe::train

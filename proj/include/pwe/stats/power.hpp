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

namespace pwe::stats {

struct PowerQuery {
  double effect_size = 0.35;  // Cohen's f
  double alpha = 0.05;
  double power = 0.8;
  std::size_t groups = 4;
};

inline constexpr std::size_t kMaxSampleSize = 10000;

/// Power of a one-way repeated-measures ANOVA with `n` subjects: noncentral F with dof
/// (k - 1, (n - 1)(k - 1)) and noncentrality n k f^2.
double repeated_measures_power(std::size_t n, double effect_size, double alpha, std::size_t groups);

/// Smallest n >= 2 reaching the requested power. Throws std::domain_error when none up to
/// kMaxSampleSize does.
std::size_t sample_size(const PowerQuery& query);

}  // namespace pwe::stats

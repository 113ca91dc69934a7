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

#include "pwe/stats/scores.hpp"

namespace pwe::stats {

struct FriedmanResult {
  double statistic = 0.0;  // tie-corrected chi-square
  double p_value = 1.0;
  std::size_t blocks = 0;
  std::size_t treatments = 0;
};

/// Friedman test with mid-ranks and tie correction; p from the chi-square tail with k - 1 dof.
FriedmanResult friedman_test(const Blocks& blocks);

inline constexpr std::size_t kExactMaxBlocks = 8;
inline constexpr std::size_t kExactMaxTreatments = 5;

/// Same statistic with p taken from the exact permutation distribution (each block's ranks
/// permuted independently). Limited to kExactMaxBlocks blocks and kExactMaxTreatments treatments.
FriedmanResult friedman_exact(const Blocks& blocks);

}  // namespace pwe::stats

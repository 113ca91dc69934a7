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

/// P(Q <= q) for the studentized range of `k` standard normals with infinite degrees of freedom.
double studentized_range_cdf(double q, std::size_t k);

/// Pairwise p-values for |mean_rank_i - mean_rank_j| / sqrt(k (k + 1) / (12 n)). Symmetric, unit
/// diagonal.
Blocks nemenyi_posthoc(const Blocks& blocks);

}  // namespace pwe::stats

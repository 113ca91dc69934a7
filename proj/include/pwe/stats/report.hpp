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
#include <iosfwd>
#include <string>

#include "pwe/stats/friedman.hpp"
#include "pwe/stats/scores.hpp"

namespace pwe::stats {

struct CriterionAnalysis {
  Criterion criterion = Criterion::speckle;
  std::vector<double> mean_scores;  // per method
  std::vector<double> mean_ranks;   // per method
  FriedmanResult friedman;
  Blocks nemenyi;
};

struct StudyAnalysis {
  std::size_t readers = 0;
  std::size_t image_sets = 0;
  std::array<CriterionAnalysis, kCriterionCount> criteria;
};

StudyAnalysis analyze(const ScoreTable& table);

/// Tab-separated report: a Friedman summary row per criterion followed by its pairwise matrix.
void write_report(std::ostream& out, const StudyAnalysis& analysis);
std::string format_report(const StudyAnalysis& analysis);

}  // namespace pwe::stats

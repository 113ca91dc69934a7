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

#include "pwe/stats/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "pwe/stats/nemenyi.hpp"

namespace pwe::stats {

StudyAnalysis analyze(const ScoreTable& table) {
  table.validate();
  StudyAnalysis out;
  out.readers = table.readers();
  out.image_sets = table.image_sets();
  for (Criterion c : kCriteria) {
    CriterionAnalysis& a = out.criteria[static_cast<std::size_t>(c)];
    a.criterion = c;
    const Blocks blocks = average_readers(table, c);
    a.mean_scores.assign(kMethodCount, 0.0);
    for (const auto& row : blocks) {
      for (std::size_t j = 0; j < kMethodCount; ++j) a.mean_scores[j] += row[j];
    }
    for (double& m : a.mean_scores) m /= static_cast<double>(blocks.size());
    if (blocks.size() >= 2) {
      a.mean_ranks = mean_ranks(blocks);
      a.friedman = friedman_test(blocks);
      a.nemenyi = nemenyi_posthoc(blocks);
    }
  }
  return out;
}

void write_report(std::ostream& out, const StudyAnalysis& analysis) {
  const auto flags = out.flags();
  out << "# readers=" << analysis.readers << " image_sets=" << analysis.image_sets << '\n';
  out << "criterion\tmethod\tmean_score\tmean_rank";
  for (Method m : kMethods) out << "\tp_vs_" << to_string(m);
  out << "\tfriedman_chi2\tfriedman_p\n";
  out << std::setprecision(6);
  for (const CriterionAnalysis& a : analysis.criteria) {
    for (std::size_t i = 0; i < kMethodCount; ++i) {
      out << to_string(a.criterion) << '\t' << to_string(kMethods[i]) << '\t' << a.mean_scores[i]
          << '\t' << (a.mean_ranks.empty() ? 0.0 : a.mean_ranks[i]);
      for (std::size_t j = 0; j < kMethodCount; ++j) {
        out << '\t';
        if (a.nemenyi.empty()) out << "nan";
        else out << a.nemenyi[i][j];
      }
      out << '\t' << a.friedman.statistic << '\t' << a.friedman.p_value << '\n';
    }
  }
  out.flags(flags);
}

std::string format_report(const StudyAnalysis& analysis) {
  std::ostringstream out;
  write_report(out, analysis);
  return out.str();
}

}  // namespace pwe::stats

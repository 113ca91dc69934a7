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

#include "pwe/stats/friedman.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace pwe::stats {
namespace {

struct RankSummary {
  std::vector<std::vector<double>> ranks;  // per block
  std::vector<double> rank_sums;
  double tie_term = 0.0;                   // sum over tie groups of t^3 - t
};

RankSummary summarize(const Blocks& blocks) {
  RankSummary s;
  s.rank_sums.assign(blocks.front().size(), 0.0);
  for (const auto& row : blocks) {
    auto r = mid_ranks(row);
    for (std::size_t j = 0; j < r.size(); ++j) s.rank_sums[j] += r[j];
    std::map<double, double> groups;
    for (double v : row) groups[v] += 1.0;
    for (const auto& [value, t] : groups) s.tie_term += t * t * t - t;
    s.ranks.push_back(std::move(r));
  }
  return s;
}

// Returns the tie-corrected statistic, or a negative value when every block is fully tied.
double statistic(const std::vector<double>& rank_sums, double n, double k, double tie_term) {
  const double denom = 1.0 - tie_term / (n * (k * k * k - k));
  if (denom <= 1e-12) return -1.0;
  double ss = 0.0;
  for (double r : rank_sums) ss += r * r;
  const double raw = 12.0 / (n * k * (k + 1.0)) * ss - 3.0 * n * (k + 1.0);
  return std::max(raw, 0.0) / denom;
}

}  // namespace

FriedmanResult friedman_test(const Blocks& blocks) {
  validate_blocks(blocks);
  const RankSummary s = summarize(blocks);
  FriedmanResult result;
  result.blocks = blocks.size();
  result.treatments = blocks.front().size();
  const double stat = statistic(s.rank_sums, static_cast<double>(result.blocks),
                                static_cast<double>(result.treatments), s.tie_term);
  if (stat <= 0.0) return result;
  result.statistic = stat;
  const boost::math::chi_squared dist(static_cast<double>(result.treatments - 1));
  result.p_value = boost::math::cdf(boost::math::complement(dist, stat));
  return result;
}

FriedmanResult friedman_exact(const Blocks& blocks) {
  validate_blocks(blocks);
  const std::size_t n = blocks.size(), k = blocks.front().size();
  if (n > kExactMaxBlocks || k > kExactMaxTreatments) {
    throw std::invalid_argument("exact Friedman limited to " + std::to_string(kExactMaxBlocks) +
                                " blocks and " + std::to_string(kExactMaxTreatments) +
                                " treatments, got " + std::to_string(n) + "x" + std::to_string(k));
  }
  const RankSummary s = summarize(blocks);
  FriedmanResult result;
  result.blocks = n;
  result.treatments = k;
  const double stat =
      statistic(s.rank_sums, static_cast<double>(n), static_cast<double>(k), s.tie_term);
  if (stat <= 0.0) return result;
  result.statistic = stat;

  // Distribution of the vector of doubled rank sums, built one block at a time. Doubling keeps
  // mid-ranks integral. Every permutation of a block's ranks is equally likely under the null, so
  // the distribution is symmetric in the treatments and states can be kept sorted.
  std::map<std::vector<int>, double> dist{{std::vector<int>(k, 0), 1.0}};
  for (const auto& r : s.ranks) {
    std::vector<int> doubled;
    for (double v : r) doubled.push_back(static_cast<int>(std::lround(2.0 * v)));
    std::sort(doubled.begin(), doubled.end());
    std::vector<std::vector<int>> perms;
    do {
      perms.push_back(doubled);
    } while (std::next_permutation(doubled.begin(), doubled.end()));
    std::map<std::vector<int>, double> next;
    for (const auto& [sums, prob] : dist) {
      for (const auto& p : perms) {
        std::vector<int> key = sums;
        for (std::size_t j = 0; j < k; ++j) key[j] += p[j];
        std::sort(key.begin(), key.end());
        next[key] += prob / static_cast<double>(perms.size());
      }
    }
    dist = std::move(next);
  }
  long long observed = 0;
  for (double r : s.rank_sums) {
    const long long d = std::lround(2.0 * r);
    observed += d * d;
  }
  double tail = 0.0;
  for (const auto& [sums, prob] : dist) {
    long long ss = 0;
    for (int v : sums) ss += static_cast<long long>(v) * v;
    if (ss >= observed) tail += prob;
  }
  result.p_value = std::min(tail, 1.0);
  return result;
}

}  // namespace pwe::stats

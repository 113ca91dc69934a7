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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "pwe/common/error.hpp"
#include "pwe/stats/friedman.hpp"
#include "pwe/stats/nemenyi.hpp"
#include "pwe/stats/power.hpp"
#include "pwe/stats/report.hpp"

namespace pwe::stats {
namespace {

Blocks random_blocks(std::size_t n, std::size_t k, std::uint64_t seed, int levels = 0) {
  std::mt19937_64 rng(seed);
  Blocks b(n, std::vector<double>(k));
  for (auto& row : b) {
    if (levels > 0) {
      std::uniform_int_distribution<int> d(0, levels - 1);
      for (double& v : row) v = d(rng);
    } else {
      std::iota(row.begin(), row.end(), 1.0);
      std::shuffle(row.begin(), row.end(), rng);
    }
  }
  return b;
}

// Rank-variance form of the tie-corrected statistic:
// (k - 1) * sum_j (R_j - n(k+1)/2)^2 / (sum of squared ranks - n k (k+1)^2 / 4).
double friedman_oracle(const Blocks& b) {
  const double n = b.size(), k = b[0].size();
  std::vector<double> sums(b[0].size(), 0.0);
  double a = 0.0;
  for (const auto& row : b) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      double less = 0, equal = 0;
      for (double v : row) {
        less += v < row[j];
        equal += v == row[j];
      }
      const double rank = less + (equal + 1.0) / 2.0;
      sums[j] += rank;
      a += rank * rank;
    }
  }
  double num = 0.0;
  for (double r : sums) num += (r - n * (k + 1) / 2) * (r - n * (k + 1) / 2);
  return (k - 1) * num / (a - n * k * (k + 1) * (k + 1) / 4);
}

// Enumerates every combination of within-block permutations.
double exact_oracle(const Blocks& b) {
  const std::size_t n = b.size(), k = b[0].size();
  std::vector<std::vector<std::vector<double>>> perms(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = mid_ranks(b[i]);
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      std::vector<double> p;
      for (std::size_t j : idx) p.push_back(r[j]);
      perms[i].push_back(p);
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  auto ss = [&](const std::vector<double>& sums) {
    double s = 0;
    for (double v : sums) s += v * v;
    return s;
  };
  const double observed = ss(mean_ranks(b));
  std::vector<std::size_t> choice(n, 0);
  double hits = 0, total = 0;
  while (true) {
    std::vector<double> sums(k, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < k; ++j) sums[j] += perms[i][choice[i]][j] / n;
    }
    hits += ss(sums) >= observed - 1e-9;
    total += 1;
    std::size_t i = 0;
    while (i < n && ++choice[i] == perms[i].size()) choice[i++] = 0;
    if (i == n) break;
  }
  return hits / total;
}

TEST(Scores, AverageReaders) {
  ScoreTable one(1, 3);
  one.at(0, 2, Method::stage1, Criterion::speckle) = 3;
  EXPECT_EQ(average_readers(one, Criterion::speckle)[2][2], 3.0);
  ScoreTable two(2, 1);
  two.at(0, 0, Method::stage2, Criterion::speckle) = 1;
  two.at(1, 0, Method::stage2, Criterion::speckle) = 2;
  EXPECT_EQ(average_readers(two, Criterion::speckle)[0][3], 1.5);

  std::mt19937_64 rng(5);
  ScoreTable t(2, 20);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t s = 0; s < 20; ++s)
      for (Method m : kMethods)
        for (Criterion c : kCriteria) t.at(r, s, m, c) = static_cast<int>(rng() % 4);
  for (Criterion c : kCriteria) {
    const Blocks b = average_readers(t, c);
    for (std::size_t s = 0; s < 20; ++s)
      for (Method m : kMethods) {
        const double direct = (t.at(0, s, m, c) + t.at(1, s, m, c)) / 2.0;
        EXPECT_EQ(b[s][static_cast<std::size_t>(m)], direct);
      }
  }
}

TEST(Scores, TextRoundTripAndErrors) {
  ScoreTable t(2, 3);
  t.at(1, 2, Method::pwc_filtered, Criterion::structural_fidelity) = 2;
  std::stringstream ss;
  t.write(ss);
  const ScoreTable back = ScoreTable::read(ss);
  EXPECT_EQ(back.readers(), 2u);
  EXPECT_EQ(back.at(1, 2, Method::pwc_filtered, Criterion::structural_fidelity), 2);

  std::stringstream text;
  t.write(text);
  std::string s = text.str();
  std::stringstream missing(s.substr(0, s.rfind('\n', s.size() - 2) + 1));
  EXPECT_THROW(ScoreTable::read(missing), FormatError);
  std::stringstream bad("reader,set,method,criterion,score\n0,0,stage1,speckle,7\n");
  EXPECT_THROW(ScoreTable::read(bad), FormatError);
  std::stringstream unknown("reader,set,method,criterion,score\n0,0,stage9,speckle,1\n");
  EXPECT_THROW(ScoreTable::read(unknown), FormatError);
  t.at(0, 0, Method::stage1, Criterion::speckle) = 4;
  EXPECT_THROW(t.validate(), std::invalid_argument);
}

TEST(Ranks, MidRanksAverageTies) {
  EXPECT_EQ(mid_ranks({3.0, 1.0, 3.0, 2.0}), (std::vector<double>{3.5, 1.0, 3.5, 2.0}));
  EXPECT_EQ(mid_ranks({1.0, 1.0, 1.0}), (std::vector<double>{2.0, 2.0, 2.0}));
}

TEST(Friedman, HandExample) {
  const Blocks b{{1, 2, 3}, {4, 5, 6}, {0.1, 0.2, 0.3}};
  const FriedmanResult r = friedman_test(b);
  EXPECT_NEAR(r.statistic, 6.0, 1e-12);
  EXPECT_NEAR(r.p_value, 0.0498, 1e-3);
  EXPECT_NEAR(r.p_value, std::exp(-3.0), 1e-12);
  EXPECT_NEAR(friedman_exact(b).p_value, 1.0 / 36.0, 1e-12);
}

TEST(Friedman, AllTied) {
  const Blocks b{{2, 2, 2}, {1, 1, 1}, {0, 0, 0}};
  const FriedmanResult r = friedman_test(b);
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_EQ(r.p_value, 1.0);
  EXPECT_EQ(friedman_exact(b).p_value, 1.0);
}

TEST(Friedman, MatchesRankVarianceFormWithTies) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Blocks b = random_blocks(5 + seed % 7, 3 + seed % 3, seed, 4);
    const double oracle = friedman_oracle(b);
    if (!std::isfinite(oracle)) continue;
    EXPECT_NEAR(friedman_test(b).statistic, oracle, 1e-10) << seed;
  }
}

TEST(Friedman, RankInvariances) {
  const Blocks b = random_blocks(10, 4, 3, 5);
  Blocks monotone = b, shifted = b;
  for (auto& row : monotone) for (double& v : row) v = std::exp(3.0 * v) - 7.0;
  for (std::size_t i = 0; i < shifted.size(); ++i) for (double& v : shifted[i]) v += 10.0 * i;
  EXPECT_DOUBLE_EQ(friedman_test(monotone).statistic, friedman_test(b).statistic);
  EXPECT_DOUBLE_EQ(friedman_test(shifted).statistic, friedman_test(b).statistic);
}

TEST(Friedman, DominantTreatmentIsSignificant) {
  std::mt19937_64 rng(11);
  Blocks b(20, std::vector<double>(4));
  for (auto& row : b) {
    for (std::size_t j = 0; j < 3; ++j) row[j] = static_cast<double>(rng() % 3) * 0.5;
    row[3] = 3.0;
  }
  EXPECT_LT(friedman_test(b).p_value, 0.01);
}

TEST(Friedman, ExactMatchesEnumeration) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const std::size_t n = 2 + seed % 3, k = 3 + seed % 2;
    const Blocks b = random_blocks(n, k, seed, seed % 2 ? 3 : 0);
    const FriedmanResult r = friedman_exact(b);
    if (r.statistic == 0.0) continue;
    EXPECT_NEAR(r.p_value, exact_oracle(b), 1e-12) << seed;
  }
  EXPECT_THROW(friedman_exact(random_blocks(9, 3, 1)), std::invalid_argument);
}

TEST(Friedman, ExactAndAsymptoticOrderTablesAlike) {
  for (std::size_t n = 3; n <= 8; ++n) {
    for (std::size_t k : {3u, 4u}) {
      std::vector<std::pair<double, double>> p;
      for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const Blocks b = random_blocks(n, k, 100 * n + 10 * k + seed);
        p.emplace_back(friedman_test(b).p_value, friedman_exact(b).p_value);
      }
      for (const auto& a : p)
        for (const auto& c : p)
          if (a.first < c.first - 1e-12) {
            EXPECT_LE(a.second, c.second + 1e-12);
          }
    }
  }
}

TEST(Nemenyi, StudentizedRangeReferenceValues) {
  for (double q : {0.5, 1.0, 2.0, 3.5}) {
    EXPECT_NEAR(studentized_range_cdf(q, 2), 2 * 0.5 * std::erfc(-q / 2.0) - 1.0, 1e-8) << q;
  }
  EXPECT_NEAR(studentized_range_cdf(2.772, 2), 0.95, 1e-3);
  EXPECT_NEAR(studentized_range_cdf(3.314, 3), 0.95, 1e-3);
  EXPECT_NEAR(studentized_range_cdf(3.633, 4), 0.95, 1e-3);
  EXPECT_EQ(studentized_range_cdf(0.0, 4), 0.0);
}

TEST(Nemenyi, IdenticalTreatments) {
  const Blocks b{{1, 1, 1, 1}, {2, 2, 2, 2}, {0, 0, 0, 0}};
  const Blocks p = nemenyi_posthoc(b);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(p[i][j], 1.0, 1e-6);
}

TEST(Nemenyi, SymmetricWithUnitDiagonal) {
  const Blocks p = nemenyi_posthoc(random_blocks(12, 4, 2, 4));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(p[i][i], 1.0);
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_EQ(p[i][j], p[j][i]);
      EXPECT_GE(p[i][j], 0.0);
      EXPECT_LE(p[i][j], 1.0);
    }
  }
}

TEST(Nemenyi, LastRankedTreatmentSeparates) {
  Blocks b = random_blocks(20, 4, 7);
  for (auto& row : b) {
    const auto it = std::min_element(row.begin(), row.end());
    std::swap(*it, row[3]);
  }
  const Blocks p = nemenyi_posthoc(b);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_LT(p[3][j], 0.05);
}

TEST(Nemenyi, PValuesShrinkWithMoreBlocks) {
  double previous = 1.0;
  for (std::size_t n : {4u, 8u, 16u, 32u}) {
    Blocks b;
    for (std::size_t i = 0; i < n / 2; ++i) {
      b.push_back({1, 2, 3});
      b.push_back({2, 1, 3});
    }
    const double p = nemenyi_posthoc(b)[0][2];
    EXPECT_LT(p, previous);
    previous = p;
  }
}

TEST(Power, SampleSizeForStudyDesign) {
  const PowerQuery q;
  const std::size_t n = sample_size(q);
  EXPECT_GE(n, 20u);
  EXPECT_LE(n, 28u);
  EXPECT_GE(repeated_measures_power(n, q.effect_size, q.alpha, q.groups), q.power);
  EXPECT_LT(repeated_measures_power(n - 1, q.effect_size, q.alpha, q.groups), q.power);
  RecordProperty("sample_size", static_cast<int>(n));
}

TEST(Power, MonotoneInEffectSize) {
  PowerQuery q;
  for (double f : {0.1, 0.2, 0.35, 0.5}) {
    q.effect_size = f;
    const std::size_t n = sample_size(q);
    q.effect_size = 2 * f;
    EXPECT_LE(sample_size(q), n);
  }
}

TEST(Power, Errors) {
  PowerQuery q;
  q.effect_size = 0.001;
  EXPECT_THROW(sample_size(q), std::domain_error);
  EXPECT_THROW(repeated_measures_power(10, -1.0, 0.05, 4), std::invalid_argument);
  EXPECT_THROW(repeated_measures_power(10, 0.3, 1.5, 4), std::invalid_argument);
}

TEST(Report, RowPerCriterionAndMethod) {
  ScoreTable t(2, 5);
  for (std::size_t s = 0; s < 5; ++s) {
    t.at(0, s, Method::stage2, Criterion::speckle) = 3;
    t.at(1, s, Method::stage1, Criterion::speckle) = 2;
  }
  const StudyAnalysis a = analyze(t);
  const std::string text = format_report(a);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2 + 8);
  EXPECT_EQ(text, format_report(analyze(t)));
  EXPECT_NEAR(a.criteria[0].mean_scores[3], 1.5, 1e-12);
  EXPECT_EQ(a.criteria[1].friedman.p_value, 1.0);
}

}  // namespace
}  // namespace pwe::stats

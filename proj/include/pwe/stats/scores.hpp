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
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace pwe::stats {

enum class Method : std::uint8_t { pw_input = 0, pwc_filtered, stage1, stage2 };
enum class Criterion : std::uint8_t { speckle = 0, structural_fidelity };

inline constexpr std::size_t kMethodCount = 4;
inline constexpr std::size_t kCriterionCount = 2;
inline constexpr std::array<Method, kMethodCount> kMethods{Method::pw_input, Method::pwc_filtered,
                                                           Method::stage1, Method::stage2};
inline constexpr std::array<Criterion, kCriterionCount> kCriteria{Criterion::speckle,
                                                                  Criterion::structural_fidelity};

std::string_view to_string(Method m);
std::string_view to_string(Criterion c);
Method parse_method(std::string_view text);
Criterion parse_criterion(std::string_view text);

/// n x k matrix: one row per block (image set), one column per treatment (method).
using Blocks = std::vector<std::vector<double>>;

/// Likert scores indexed [reader][image_set][method][criterion], each in {0, 1, 2, 3}.
class ScoreTable {
 public:
  ScoreTable(std::size_t readers, std::size_t image_sets);

  std::size_t readers() const { return readers_; }
  std::size_t image_sets() const { return sets_; }

  int& at(std::size_t reader, std::size_t set, Method m, Criterion c);
  int at(std::size_t reader, std::size_t set, Method m, Criterion c) const;

  /// Throws std::invalid_argument naming the first cell outside {0, 1, 2, 3}.
  void validate() const;

  /// Delimited text with a header line `reader,set,method,criterion,score`; every cell must be
  /// present exactly once. Throws FormatError otherwise.
  static ScoreTable read(std::istream& in);
  static ScoreTable load(const std::filesystem::path& path);
  void write(std::ostream& out) const;

 private:
  std::size_t index(std::size_t reader, std::size_t set, Method m, Criterion c) const;

  std::size_t readers_;
  std::size_t sets_;
  std::vector<int> scores_;
};

/// Reader-averaged scores for one criterion as an image_sets x methods block matrix.
Blocks average_readers(const ScoreTable& table, Criterion criterion);

/// Checks that the matrix is rectangular with at least `min_rows` rows and `min_cols` columns.
void validate_blocks(const Blocks& blocks, std::size_t min_rows = 2, std::size_t min_cols = 2);

/// Mid-ranks (1-based, ties averaged) of one row.
std::vector<double> mid_ranks(const std::vector<double>& row);

/// Column means of the within-row mid-ranks.
std::vector<double> mean_ranks(const Blocks& blocks);

}  // namespace pwe::stats

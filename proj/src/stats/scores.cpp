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

#include "pwe/stats/scores.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pwe/common/error.hpp"

namespace pwe::stats {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::pw_input: return "pw_input";
    case Method::pwc_filtered: return "pwc_filtered";
    case Method::stage1: return "stage1";
    case Method::stage2: return "stage2";
  }
  return "unknown";
}

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::speckle: return "speckle";
    case Criterion::structural_fidelity: return "structural_fidelity";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  for (Method m : kMethods) {
    if (to_string(m) == text) return m;
  }
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

Criterion parse_criterion(std::string_view text) {
  for (Criterion c : kCriteria) {
    if (to_string(c) == text) return c;
  }
  throw std::invalid_argument("unknown criterion '" + std::string(text) + "'");
}

ScoreTable::ScoreTable(std::size_t readers, std::size_t image_sets)
    : readers_(readers), sets_(image_sets),
      scores_(readers * image_sets * kMethodCount * kCriterionCount, 0) {
  if (readers == 0 || image_sets == 0) {
    throw std::invalid_argument("ScoreTable needs at least one reader and one image set");
  }
}

std::size_t ScoreTable::index(std::size_t reader, std::size_t set, Method m, Criterion c) const {
  if (reader >= readers_ || set >= sets_) {
    throw std::out_of_range("ScoreTable: reader " + std::to_string(reader) + ", set " +
                            std::to_string(set) + " out of range");
  }
  return ((reader * sets_ + set) * kMethodCount + static_cast<std::size_t>(m)) * kCriterionCount +
         static_cast<std::size_t>(c);
}

int& ScoreTable::at(std::size_t reader, std::size_t set, Method m, Criterion c) {
  return scores_[index(reader, set, m, c)];
}

int ScoreTable::at(std::size_t reader, std::size_t set, Method m, Criterion c) const {
  return scores_[index(reader, set, m, c)];
}

void ScoreTable::validate() const {
  for (std::size_t r = 0; r < readers_; ++r) {
    for (std::size_t s = 0; s < sets_; ++s) {
      for (Method m : kMethods) {
        for (Criterion c : kCriteria) {
          const int v = at(r, s, m, c);
          if (v < 0 || v > 3) {
            std::ostringstream msg;
            msg << "score " << v << " at reader " << r << ", set " << s << ", " << to_string(m)
                << ", " << to_string(c) << " is outside 0..3";
            throw std::invalid_argument(msg.str());
          }
        }
      }
    }
  }
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) {
    const auto b = f.find_first_not_of(" \t\r");
    const auto e = f.find_last_not_of(" \t\r");
    fields.push_back(b == std::string::npos ? "" : f.substr(b, e - b + 1));
  }
  return fields;
}

long long parse_integer(const std::string& text, std::size_t line_no) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw FormatError("scores line " + std::to_string(line_no) + ": '" + text + "' is not an integer");
  }
  return v;
}

}  // namespace

ScoreTable ScoreTable::read(std::istream& in) {
  struct Cell {
    long long reader, set;
    Method method;
    Criterion criterion;
    long long score;
    std::size_t line;
  };
  std::vector<Cell> cells;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    const auto f = split_fields(line);
    if (!header_seen) {
      if (f != std::vector<std::string>{"reader", "set", "method", "criterion", "score"}) {
        throw FormatError("scores: expected header 'reader,set,method,criterion,score'");
      }
      header_seen = true;
      continue;
    }
    if (f.size() != 5) {
      throw FormatError("scores line " + std::to_string(line_no) + ": expected 5 fields");
    }
    Cell c{parse_integer(f[0], line_no), parse_integer(f[1], line_no), Method::pw_input,
           Criterion::speckle, parse_integer(f[4], line_no), line_no};
    try {
      c.method = parse_method(f[2]);
      c.criterion = parse_criterion(f[3]);
    } catch (const std::invalid_argument& e) {
      throw FormatError("scores line " + std::to_string(line_no) + ": " + e.what());
    }
    if (c.reader < 0 || c.set < 0) {
      throw FormatError("scores line " + std::to_string(line_no) + ": negative index");
    }
    cells.push_back(c);
  }
  if (cells.empty()) throw FormatError("scores: no rows");
  long long max_reader = 0, max_set = 0;
  for (const Cell& c : cells) {
    max_reader = std::max(max_reader, c.reader);
    max_set = std::max(max_set, c.set);
  }
  ScoreTable table(static_cast<std::size_t>(max_reader) + 1, static_cast<std::size_t>(max_set) + 1);
  std::vector<bool> seen(table.scores_.size(), false);
  for (const Cell& c : cells) {
    const std::size_t i = table.index(c.reader, c.set, c.method, c.criterion);
    if (seen[i]) {
      throw FormatError("scores line " + std::to_string(c.line) + ": duplicate cell");
    }
    if (c.score < 0 || c.score > 3) {
      throw FormatError("scores line " + std::to_string(c.line) + ": score outside 0..3");
    }
    seen[i] = true;
    table.scores_[i] = static_cast<int>(c.score);
  }
  const auto missing = std::count(seen.begin(), seen.end(), false);
  if (missing > 0) {
    throw FormatError("scores: " + std::to_string(missing) + " cells missing (incomplete blocks)");
  }
  return table;
}

ScoreTable ScoreTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read(in);
}

void ScoreTable::write(std::ostream& out) const {
  out << "reader,set,method,criterion,score\n";
  for (std::size_t r = 0; r < readers_; ++r) {
    for (std::size_t s = 0; s < sets_; ++s) {
      for (Method m : kMethods) {
        for (Criterion c : kCriteria) {
          out << r << ',' << s << ',' << to_string(m) << ',' << to_string(c) << ','
              << at(r, s, m, c) << '\n';
        }
      }
    }
  }
}

Blocks average_readers(const ScoreTable& table, Criterion criterion) {
  Blocks blocks(table.image_sets(), std::vector<double>(kMethodCount, 0.0));
  for (std::size_t s = 0; s < table.image_sets(); ++s) {
    for (Method m : kMethods) {
      double sum = 0.0;
      for (std::size_t r = 0; r < table.readers(); ++r) sum += table.at(r, s, m, criterion);
      blocks[s][static_cast<std::size_t>(m)] = sum / static_cast<double>(table.readers());
    }
  }
  return blocks;
}

void validate_blocks(const Blocks& blocks, std::size_t min_rows, std::size_t min_cols) {
  if (blocks.size() < min_rows) {
    throw std::invalid_argument("need at least " + std::to_string(min_rows) + " blocks, got " +
                                std::to_string(blocks.size()));
  }
  const std::size_t k = blocks.front().size();
  if (k < min_cols) {
    throw std::invalid_argument("need at least " + std::to_string(min_cols) +
                                " treatments, got " + std::to_string(k));
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() != k) {
      throw std::invalid_argument("block " + std::to_string(i) + " has " +
                                  std::to_string(blocks[i].size()) + " entries, expected " +
                                  std::to_string(k));
    }
  }
}

std::vector<double> mid_ranks(const std::vector<double>& row) {
  std::vector<std::size_t> order(row.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return row[a] < row[b]; });
  std::vector<double> ranks(row.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && row[order[j + 1]] == row[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

std::vector<double> mean_ranks(const Blocks& blocks) {
  validate_blocks(blocks, 1, 1);
  std::vector<double> sums(blocks.front().size(), 0.0);
  for (const auto& row : blocks) {
    const auto r = mid_ranks(row);
    for (std::size_t j = 0; j < r.size(); ++j) sums[j] += r[j];
  }
  for (double& s : sums) s /= static_cast<double>(blocks.size());
  return sums;
}

}  // namespace pwe::stats

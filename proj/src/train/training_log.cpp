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

#include "pwe/train/training_log.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "pwe/common/error.hpp"

namespace pwe::train {

TrainingLog::TrainingLog(std::string title, std::vector<std::string> columns)
    : title_(std::move(title)), columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("TrainingLog: no columns");
}

void TrainingLog::add_row(std::vector<double> values) {
  if (values.size() != columns_.size()) {
    throw std::invalid_argument("TrainingLog: row has " + std::to_string(values.size()) +
                                " values for " + std::to_string(columns_.size()) + " columns");
  }
  rows_.push_back(std::move(values));
}

std::vector<double> TrainingLog::column(const std::string& name) const {
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (columns_[c] == name) {
      std::vector<double> v;
      v.reserve(rows_.size());
      for (const auto& r : rows_) v.push_back(r[c]);
      return v;
    }
  }
  throw std::invalid_argument("TrainingLog: no column '" + name + "'");
}

void TrainingLog::write(std::ostream& out) const {
  out << "# " << title_ << '\n' << header_.to_string("# ");
  for (std::size_t c = 0; c < columns_.size(); ++c) out << (c ? "\t" : "") << columns_[c];
  out << '\n' << std::setprecision(17);
  for (const auto& r : rows_) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "\t" : "") << r[c];
    out << '\n';
  }
}

void TrainingLog::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write(out);
}

TrainingLog TrainingLog::read(std::istream& in) {
  std::string line, title;
  std::string header_text;
  std::vector<std::string> columns;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      if (title.empty()) {
        title = line.substr(2);
      } else {
        header_text += line.substr(2) + "\n";
      }
      continue;
    }
    std::istringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) columns.push_back(col);
    break;
  }
  if (columns.empty()) throw FormatError("training log: missing column header");
  TrainingLog log(title, columns);
  log.header_ = KeyValueFile::parse(header_text, "training log header");
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::vector<double> row;
    std::string cell;
    while (std::getline(ss, cell, '\t')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw FormatError("training log: bad number '" + cell + "' in record " + std::to_string(line_no));
      }
    }
    if (row.size() != columns.size()) {
      throw FormatError("training log: record " + std::to_string(line_no) + " has " +
                        std::to_string(row.size()) + " fields, expected " + std::to_string(columns.size()));
    }
    log.rows_.push_back(std::move(row));
  }
  return log;
}

TrainingLog TrainingLog::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read(in);
}

}  // namespace pwe::train

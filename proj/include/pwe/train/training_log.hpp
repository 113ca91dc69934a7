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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "pwe/common/key_value.hpp"

namespace pwe::train {

/// Plain-text training log:
///
///   # <title>
///   # key=value          (configuration echo, one per line)
///   col1<TAB>col2...     (column header)
///   v1<TAB>v2...         (one record per line)
class TrainingLog {
 public:
  TrainingLog(std::string title, std::vector<std::string> columns);

  KeyValueFile& header() { return header_; }
  const KeyValueFile& header() const { return header_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

  void add_row(std::vector<double> values);
  std::vector<double> column(const std::string& name) const;

  void write(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  static TrainingLog read(std::istream& in);
  static TrainingLog load(const std::filesystem::path& path);

 private:
  std::string title_;
  KeyValueFile header_;
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

}  // namespace pwe::train

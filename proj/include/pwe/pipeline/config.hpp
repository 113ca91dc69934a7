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
#include <cstdint>
#include <filesystem>
#include <string_view>

#include "pwe/common/key_value.hpp"
#include "pwe/imgproc/ground_truth.hpp"
#include "pwe/nn/builders.hpp"

namespace pwe::pipeline {

enum class Mode : std::uint8_t { histogram_only, stage1, stage1_plus_2, stage2_only };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);
bool uses_stage1(Mode mode);
bool uses_stage2(Mode mode);

struct BenchSettings {
  std::size_t warmup_frames = 10;
  double duration_s = 5.0;
  double window_s = 1.0;
  bool include_beamforming = true;
};

/// Everything a pipeline run needs. Paths are resolved relative to the working directory.
struct PipelineConfig {
  Mode mode = Mode::histogram_only;
  std::filesystem::path stage1_weights;
  std::filesystem::path stage2_weights;
  std::filesystem::path reference_cdf;  // empty: bundled Rayleigh template
  std::filesystem::path rois;           // empty: no metrics table
  img::EnhanceParams enhance;
  nn::GeneratorConfig stage1 = default_stage1();
  nn::GeneratorConfig stage2 = default_stage2();
  BenchSettings bench;
  bool single_thread = false;
  std::uint64_t seed = 1;

  static nn::GeneratorConfig default_stage1();
  static nn::GeneratorConfig default_stage2();

  /// Value checks that need no file system access. Throws ConfigError.
  void validate() const;
  /// Throws ConfigError naming the first referenced file that does not exist.
  void check_files() const;

  KeyValueFile to_key_values() const;
  /// Unknown keys are rejected so that typos surface as errors.
  static PipelineConfig from_key_values(const KeyValueFile& kv);
  static PipelineConfig load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;
};

}  // namespace pwe::pipeline

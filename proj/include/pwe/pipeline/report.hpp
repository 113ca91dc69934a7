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

#include "pwe/metrics/metrics.hpp"
#include "pwe/pipeline/bench.hpp"

namespace pwe::pipeline {

struct MetricsRecord {
  std::string image_set;
  std::string method;
  metrics::QualityRow row;
};

/// Tab-separated `image_set method nrmse ssim cnr speckle_std fiber_std`, one line per record.
void write_metrics_table(std::ostream& out, const std::vector<MetricsRecord>& records);

/// Tab-separated `mode beamforming frames seconds mean_fps std_fps frame_ms processing_fps breakdown`,
/// the breakdown being comma-separated `stage=milliseconds` pairs.
void write_fps_table(std::ostream& out, const std::vector<FrameRateReport>& reports);

void save_text(const std::filesystem::path& path, const std::string& text);

}  // namespace pwe::pipeline

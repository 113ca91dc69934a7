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

#include "pwe/pipeline/report.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace pwe::pipeline {

void write_metrics_table(std::ostream& out, const std::vector<MetricsRecord>& records) {
  const auto flags = out.flags();
  out << "image_set\tmethod\tnrmse\tssim\tcnr\tspeckle_std\tfiber_std\n" << std::setprecision(6);
  for (const MetricsRecord& r : records) {
    out << r.image_set << '\t' << r.method << '\t' << r.row.nrmse << '\t' << r.row.ssim << '\t'
        << r.row.cnr << '\t' << r.row.speckle_std << '\t' << r.row.fiber_std << '\n';
  }
  out.flags(flags);
}

void write_fps_table(std::ostream& out, const std::vector<FrameRateReport>& reports) {
  const auto flags = out.flags();
  out << "mode\tbeamforming\tframes\tseconds\tmean_fps\tstd_fps\tframe_ms\tprocessing_fps\tbreakdown_ms\n"
      << std::fixed << std::setprecision(3);
  for (const FrameRateReport& r : reports) {
    out << to_string(r.mode) << '\t' << (r.includes_beamforming ? "included" : "excluded") << '\t'
        << r.frames_processed << '\t' << r.measured_seconds << '\t' << r.mean_fps << '\t'
        << r.std_fps << '\t' << r.mean_frame_ms << '\t' << r.processing_fps << '\t';
    for (std::size_t i = 0; i < r.breakdown.size(); ++i) {
      out << (i ? "," : "") << r.breakdown[i].stage << '=' << r.breakdown[i].milliseconds;
    }
    out << '\n';
  }
  out.flags(flags);
}

void save_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace pwe::pipeline

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
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pwe/acq/transducer.hpp"
#include "pwe/pipeline/pipeline.hpp"

namespace pwe::pipeline {

/// The frame source ran dry before warm-up finished.
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Supplies frames in order; an empty optional means the source is exhausted.
using FrameSource = std::function<std::optional<acq::RFFrame>()>;

/// Replays `frames` cyclically, `max_frames` in total (0 for unlimited).
FrameSource replay_source(std::vector<acq::RFFrame> frames, std::size_t max_frames = 0);

struct FrameRateReport {
  Mode mode = Mode::histogram_only;
  bool includes_beamforming = true;
  bool pipelined = false;
  std::size_t frames_processed = 0;   // after warm-up
  double measured_seconds = 0.0;
  std::size_t windows = 0;
  double mean_fps = 0.0;
  double std_fps = 0.0;               // population std over windows
  double mean_frame_ms = 0.0;
  double processing_fps = 0.0;        // 1000 / mean time outside beamforming and display
  std::vector<StageTiming> breakdown; // mean per stage
};

/// Saturation benchmark: frames are processed back to back. The first `warmup_frames` are
/// excluded, then frames are processed for `duration_s`. FPS is counted per `window_s` window.
FrameRateReport bench_fps(const Pipeline& pipeline, const FrameSource& source);

}  // namespace pwe::pipeline

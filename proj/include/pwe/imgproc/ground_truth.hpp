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

#include <span>

#include "pwe/acq/transducer.hpp"
#include "pwe/beamform/das.hpp"
#include "pwe/beamform/grid.hpp"
#include "pwe/imgproc/bmode.hpp"
#include "pwe/imgproc/histogram.hpp"

namespace pwe::img {

/// Cached rayleigh_reference_cdf().
const ReferenceCdf& default_reference_cdf();

/// Parameters of the classical image-formation and filtering chain.
struct EnhanceParams {
  bf::PixelGrid grid = bf::default_grid();
  double f_number = bf::kDefaultFNumber;
  double dynamic_range_db = kDefaultDynamicRangeDb;
  std::size_t output_width = 512;
  std::size_t output_height = 512;
  ReferenceCdf reference = default_reference_cdf();
  double unsharp_sigma = 3.0;    // pixels at the output resolution
  double unsharp_amount = 0.8;
  bool apply_histogram_match = true;
  bool apply_unsharp = true;
};

struct GroundTruthStages {
  BModeImage compounded;    // compounded, envelope, log, bicubic
  BModeImage ground_truth;  // + histogram matching + unsharp masking
};

/// beamform -> compound -> envelope -> log_compress -> bicubic -> histogram_match -> unsharp.
GroundTruthStages ground_truth_stages(std::span<const acq::RFFrame> frames,
                                      const EnhanceParams& params = {});

/// Final image of ground_truth_stages, tagged filtered_ground_truth. With both filters disabled
/// it equals the compounded stage.
BModeImage make_ground_truth(std::span<const acq::RFFrame> frames, const EnhanceParams& params = {});

/// Single-transmit network input: beamform -> envelope -> log_compress -> bicubic.
BModeImage make_input_image(const acq::RFFrame& frame, const EnhanceParams& params = {});

/// Display-stage formation of an already beamformed image (envelope, log, resize).
BModeImage form_display_image(const bf::ComplexImage& beamformed, const EnhanceParams& params,
                              StageTag tag);

}  // namespace pwe::img

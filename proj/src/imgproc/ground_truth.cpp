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

#include "pwe/imgproc/ground_truth.hpp"

#include <stdexcept>
#include <vector>

#include "pwe/imgproc/resize.hpp"
#include "pwe/imgproc/unsharp.hpp"

namespace pwe::img {

const ReferenceCdf& default_reference_cdf() {
  static const ReferenceCdf cdf = rayleigh_reference_cdf();
  return cdf;
}

BModeImage form_display_image(const bf::ComplexImage& beamformed, const EnhanceParams& params,
                              StageTag tag) {
  const BModeImage native = to_bmode(beamformed, params.dynamic_range_db, tag);
  return bicubic_resize(native, params.output_width, params.output_height);
}

GroundTruthStages ground_truth_stages(std::span<const acq::RFFrame> frames,
                                      const EnhanceParams& params) {
  if (frames.empty()) throw std::invalid_argument("make_ground_truth: no frames");
  std::vector<bf::ComplexImage> beamformed;
  beamformed.reserve(frames.size());
  for (const auto& f : frames) beamformed.push_back(bf::das_beamform(f, params.grid, params.f_number));

  GroundTruthStages out{form_display_image(bf::compound(beamformed), params, StageTag::compounded),
                        {}};
  BModeImage gt = out.compounded;
  if (params.apply_histogram_match) gt = histogram_match(gt, params.reference);
  if (params.apply_unsharp) gt = unsharp_mask(gt, params.unsharp_sigma, params.unsharp_amount);
  if (params.apply_histogram_match || params.apply_unsharp) gt.tag = StageTag::filtered_ground_truth;
  out.ground_truth = std::move(gt);
  return out;
}

BModeImage make_ground_truth(std::span<const acq::RFFrame> frames, const EnhanceParams& params) {
  return ground_truth_stages(frames, params).ground_truth;
}

BModeImage make_input_image(const acq::RFFrame& frame, const EnhanceParams& params) {
  return form_display_image(bf::das_beamform(frame, params.grid, params.f_number), params,
                            StageTag::plane_wave_input);
}

}  // namespace pwe::img

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

#include "pwe/imgproc/image.hpp"
#include "pwe/metrics/roi.hpp"

namespace pwe::metrics {

/// ||img - ground_truth||_2 / ||ground_truth||_2.
double nrmse(const img::Image& image, const img::Image& ground_truth);

struct SsimParams {
  std::size_t window = 11;
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 1.0;
};

/// Mean structural similarity over every fully contained window, uniformly weighted.
double ssim(const img::Image& image, const img::Image& ground_truth, const SsimParams& params = {});

/// Mean and population standard deviation.
struct RegionStats {
  double mean = 0.0;
  double std = 0.0;
  std::size_t count = 0;
};

RegionStats region_stats(const img::Image& image, const Rect& box);

/// Bilinear samples at unit spacing from the first end point towards the second.
RegionStats line_stats(const img::Image& image, const Segment& segment);

double roi_std(const img::Image& image, const Rect& box);
double line_std(const img::Image& image, const Segment& segment);

/// (mean_hyper - mean_hypo) / ((std_hypo + std_hyper) / 2).
double cnr(const img::Image& image, const Rect& hyper_box, const Rect& hypo_box);
double cnr(const img::Image& image, const RoiSet& rois);

/// One row of an image-quality table. Ground-truth metrics are NaN when no reference is given.
struct QualityRow {
  double nrmse = 0.0;
  double ssim = 0.0;
  double cnr = 0.0;
  double speckle_std = 0.0;
  double fiber_std = 0.0;
};

QualityRow evaluate(const img::Image& image, const RoiSet& rois,
                    const img::Image* ground_truth = nullptr);

}  // namespace pwe::metrics

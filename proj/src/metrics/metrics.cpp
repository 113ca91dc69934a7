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

#include "pwe/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace pwe::metrics {
namespace {

void require_same_shape(const img::Image& a, const img::Image& b, const char* what) {
  if (!a.same_shape(b) || a.empty()) {
    throw std::invalid_argument(std::string(what) + ": images must be non-empty and equally sized (" +
                                std::to_string(a.width()) + 'x' + std::to_string(a.height()) +
                                " vs " + std::to_string(b.width()) + 'x' +
                                std::to_string(b.height()) + ')');
  }
}

RegionStats stats_of(const std::vector<double>& v) {
  // Moments are taken about the first sample so that constant regions give exactly zero spread.
  const double shift = v.front();
  double m = 0.0;
  for (double x : v) m += x - shift;
  m /= static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - shift - m) * (x - shift - m);
  RegionStats s;
  s.count = v.size();
  s.mean = shift + m;
  s.std = std::sqrt(ss / static_cast<double>(v.size()));
  return s;
}

// Sum over every `window`-wide run of each row, then every `window`-tall run of those sums.
std::vector<double> box_sums(const std::vector<double>& v, std::size_t width, std::size_t height,
                             std::size_t window) {
  const std::size_t ow = width - window + 1, oh = height - window + 1;
  std::vector<double> rows(height * ow, 0.0);
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < ow; ++c) {
      double s = 0.0;
      for (std::size_t k = 0; k < window; ++k) s += v[r * width + c + k];
      rows[r * ow + c] = s;
    }
  }
  std::vector<double> out(oh * ow, 0.0);
  for (std::size_t r = 0; r < oh; ++r) {
    for (std::size_t c = 0; c < ow; ++c) {
      double s = 0.0;
      for (std::size_t k = 0; k < window; ++k) s += rows[(r + k) * ow + c];
      out[r * ow + c] = s;
    }
  }
  return out;
}

}  // namespace

double nrmse(const img::Image& image, const img::Image& ground_truth) {
  require_same_shape(image, ground_truth, "nrmse");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < image.size(); ++i) {
    const double d = image.data()[i] - ground_truth.data()[i];
    num += d * d;
    den += ground_truth.data()[i] * ground_truth.data()[i];
  }
  if (den == 0.0) throw std::invalid_argument("nrmse: ground truth has zero norm");
  return std::sqrt(num / den);
}

double ssim(const img::Image& image, const img::Image& ground_truth, const SsimParams& params) {
  require_same_shape(image, ground_truth, "ssim");
  const std::size_t w = image.width(), h = image.height(), win = params.window;
  if (win == 0 || w < win || h < win) {
    throw std::invalid_argument("ssim: image smaller than the " + std::to_string(win) + "-pixel window");
  }
  const std::vector<double>& x = image.data();
  const std::vector<double>& y = ground_truth.data();
  std::vector<double> xx(x.size()), yy(x.size()), xy(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    xx[i] = x[i] * x[i];
    yy[i] = y[i] * y[i];
    xy[i] = x[i] * y[i];
  }
  const auto sx = box_sums(x, w, h, win), sy = box_sums(y, w, h, win);
  const auto sxx = box_sums(xx, w, h, win), syy = box_sums(yy, w, h, win),
             sxy = box_sums(xy, w, h, win);
  const double n = static_cast<double>(win * win);
  const double c1 = std::pow(params.k1 * params.dynamic_range, 2);
  const double c2 = std::pow(params.k2 * params.dynamic_range, 2);
  double total = 0.0;
  for (std::size_t i = 0; i < sx.size(); ++i) {
    const double mx = sx[i] / n, my = sy[i] / n;
    const double vx = sxx[i] / n - mx * mx, vy = syy[i] / n - my * my, cxy = sxy[i] / n - mx * my;
    total += (2 * mx * my + c1) * (2 * cxy + c2) / ((mx * mx + my * my + c1) * (vx + vy + c2));
  }
  return total / static_cast<double>(sx.size());
}

RegionStats region_stats(const img::Image& image, const Rect& box) {
  box.validate(image.width(), image.height(), "region");
  std::vector<double> v;
  v.reserve(box.area());
  for (std::size_t r = box.y; r < box.y + box.height; ++r) {
    for (std::size_t c = box.x; c < box.x + box.width; ++c) v.push_back(image.at(r, c));
  }
  return stats_of(v);
}

RegionStats line_stats(const img::Image& image, const Segment& segment) {
  segment.validate(image.width(), image.height(), "segment");
  const double len = segment.length();
  const double ux = (static_cast<double>(segment.x1) - static_cast<double>(segment.x0)) / len;
  const double uy = (static_cast<double>(segment.y1) - static_cast<double>(segment.y0)) / len;
  const std::size_t n = segment.sample_count();
  std::vector<double> v;
  v.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double px = std::clamp(static_cast<double>(segment.x0) + ux * static_cast<double>(k), 0.0,
                                 image.width() - 1.0);
    const double py = std::clamp(static_cast<double>(segment.y0) + uy * static_cast<double>(k), 0.0,
                                 image.height() - 1.0);
    const auto c0 = static_cast<std::size_t>(std::floor(px));
    const auto r0 = static_cast<std::size_t>(std::floor(py));
    const std::size_t c1 = std::min(c0 + 1, image.width() - 1);
    const std::size_t r1 = std::min(r0 + 1, image.height() - 1);
    const double fx = px - static_cast<double>(c0), fy = py - static_cast<double>(r0);
    const double top = (1 - fx) * image.at(r0, c0) + fx * image.at(r0, c1);
    const double bottom = (1 - fx) * image.at(r1, c0) + fx * image.at(r1, c1);
    v.push_back((1 - fy) * top + fy * bottom);
  }
  return stats_of(v);
}

double roi_std(const img::Image& image, const Rect& box) { return region_stats(image, box).std; }

double line_std(const img::Image& image, const Segment& segment) {
  return line_stats(image, segment).std;
}

double cnr(const img::Image& image, const Rect& hyper_box, const Rect& hypo_box) {
  const RegionStats hyper = region_stats(image, hyper_box);
  const RegionStats hypo = region_stats(image, hypo_box);
  const double spread = 0.5 * (hyper.std + hypo.std);
  if (spread == 0.0) throw std::invalid_argument("cnr: both regions have zero spread");
  return (hyper.mean - hypo.mean) / spread;
}

double cnr(const img::Image& image, const RoiSet& rois) {
  return cnr(image, rois.hyper_box, rois.hypo_box);
}

QualityRow evaluate(const img::Image& image, const RoiSet& rois, const img::Image* ground_truth) {
  rois.validate(image.width(), image.height());
  QualityRow row;
  row.nrmse = ground_truth ? nrmse(image, *ground_truth) : std::numeric_limits<double>::quiet_NaN();
  row.ssim = ground_truth ? ssim(image, *ground_truth) : std::numeric_limits<double>::quiet_NaN();
  row.cnr = cnr(image, rois);
  row.speckle_std = roi_std(image, rois.speckle_box);
  row.fiber_std = line_std(image, rois.fiber_segment);
  return row;
}

}  // namespace pwe::metrics

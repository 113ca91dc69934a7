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

#include "pwe/imgproc/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "pwe/common/binary_io.hpp"
#include "pwe/imgproc/bmode.hpp"

namespace pwe::img {

std::size_t intensity_bin(double v) {
  const double scaled = std::floor(v * static_cast<double>(kHistogramBins));
  if (!(scaled > 0.0)) return 0;
  return std::min(kHistogramBins - 1, static_cast<std::size_t>(scaled));
}

double bin_center(std::size_t bin) {
  return (static_cast<double>(bin) + 0.5) / static_cast<double>(kHistogramBins);
}

void ReferenceCdf::validate() const {
  double prev = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= prev) || values[i] > 1.0) {
      throw std::invalid_argument("reference CDF: not non-decreasing within [0, 1] at bin " +
                                  std::to_string(i));
    }
    prev = values[i];
  }
  if (values.back() != 1.0) throw std::invalid_argument("reference CDF: must end at 1.0");
}

ReferenceCdf ReferenceCdf::from_image(const Image& image) {
  if (image.empty()) throw std::invalid_argument("reference CDF: empty image");
  std::array<std::size_t, kHistogramBins> counts{};
  for (double v : image.data()) ++counts[intensity_bin(v)];
  ReferenceCdf cdf;
  std::size_t running = 0;
  for (std::size_t b = 0; b < kHistogramBins; ++b) {
    running += counts[b];
    cdf.values[b] = static_cast<double>(running) / static_cast<double>(image.size());
  }
  cdf.values.back() = 1.0;
  return cdf;
}

std::size_t ReferenceCdf::inverse(double p) const {
  const auto it = std::lower_bound(values.begin(), values.end(), p);
  if (it == values.end()) return kHistogramBins - 1;
  return static_cast<std::size_t>(it - values.begin());
}

void save_reference_cdf(const ReferenceCdf& cdf, const std::filesystem::path& path) {
  cdf.validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  BinaryWriter w(out);
  for (double v : cdf.values) w.write_f64(v);
}

ReferenceCdf load_reference_cdf(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  BinaryReader r(in, "reference CDF");
  ReferenceCdf cdf;
  for (std::size_t i = 0; i < kHistogramBins; ++i) {
    cdf.values[i] = r.read_f64("value[" + std::to_string(i) + "]");
  }
  if (!r.at_end()) r.fail("trailing data after 256 values");
  try {
    cdf.validate();
  } catch (const std::invalid_argument& e) {
    r.fail(e.what());
  }
  return cdf;
}

ReferenceCdf rayleigh_reference_cdf() {
  constexpr std::size_t kSide = 512;
  // splitmix64 keeps the template identical across standard libraries.
  std::uint64_t state = 0x5eedcdf0a11ce5ULL;
  auto next_unit = [&state]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return (static_cast<double>(z >> 11) + 0.5) / 9007199254740992.0;
  };
  Image env(kSide, kSide);
  for (double& v : env.data()) v = std::sqrt(-2.0 * std::log(next_unit()));
  return ReferenceCdf::from_image(log_compress(env, kDefaultDynamicRangeDb));
}

std::array<double, kHistogramBins> matching_table(const Image& source,
                                                  const ReferenceCdf& reference) {
  const ReferenceCdf src = ReferenceCdf::from_image(source);
  std::array<double, kHistogramBins> table{};
  for (std::size_t b = 0; b < kHistogramBins; ++b) {
    table[b] = bin_center(reference.inverse(src.values[b]));
  }
  return table;
}

BModeImage histogram_match(const BModeImage& image, const ReferenceCdf& reference) {
  reference.validate();
  const auto& data = image.pixels.data();
  Image out(image.width(), image.height());
  const bool constant =
      std::all_of(data.begin(), data.end(), [&](double v) { return v == data.front(); });
  if (constant) {
    std::fill(out.data().begin(), out.data().end(), reference.median());
  } else {
    const auto table = matching_table(image.pixels, reference);
    for (std::size_t i = 0; i < data.size(); ++i) out.data()[i] = table[intensity_bin(data[i])];
  }
  return BModeImage(std::move(out), image.grid, image.tag);
}

BModeImage histogram_match(const BModeImage& image, const BModeImage& reference) {
  const auto& data = reference.pixels.data();
  const bool degenerate =
      data.empty() ||
      std::all_of(data.begin(), data.end(), [&](double v) { return v == data.front(); });
  if (degenerate) {
    throw std::invalid_argument("histogram_match: reference needs at least two distinct values");
  }
  return histogram_match(image, ReferenceCdf::from_image(reference.pixels));
}

}  // namespace pwe::img

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

#include "pwe/train/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pwe/imgproc/unsharp.hpp"

namespace pwe::train {
namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

}  // namespace

nn::Tensor image_to_tensor(const img::Image& image) {
  std::vector<float> v(image.data().begin(), image.data().end());
  return nn::Tensor({1, image.height(), image.width(), 1}, std::move(v));
}

img::Image tensor_to_image(const nn::Tensor& t) {
  t.require_nhwc("tensor_to_image");
  if (t.batch() != 1 || t.channels() != 1) {
    throw std::invalid_argument("tensor_to_image: expected a single-channel, single-sample tensor, got " +
                                nn::shape_string(t.shape()));
  }
  return img::Image(t.width(), t.height(), std::vector<double>(t.values().begin(), t.values().end()));
}

template <class S>
DataSplit<S> split_dataset(std::vector<S> samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = samples.size(); i > 1; --i) {
    std::swap(samples[i - 1], samples[static_cast<std::size_t>(rng() % i)]);
  }
  const std::size_t n = samples.size();
  std::size_t n_val = n / 10, n_test = n / 10;
  if (n >= 3) {
    n_val = std::max<std::size_t>(n_val, 1);
    n_test = std::max<std::size_t>(n_test, 1);
  }
  DataSplit<S> s;
  const std::size_t n_train = n - n_val - n_test;
  s.train.assign(std::make_move_iterator(samples.begin()),
                 std::make_move_iterator(samples.begin() + static_cast<std::ptrdiff_t>(n_train)));
  s.validation.assign(std::make_move_iterator(samples.begin() + static_cast<std::ptrdiff_t>(n_train)),
                      std::make_move_iterator(samples.begin() + static_cast<std::ptrdiff_t>(n_train + n_val)));
  s.test.assign(std::make_move_iterator(samples.begin() + static_cast<std::ptrdiff_t>(n_train + n_val)),
                std::make_move_iterator(samples.end()));
  return s;
}

template DataSplit<PairedSample> split_dataset(std::vector<PairedSample>, std::uint64_t);
template DataSplit<nn::Tensor> split_dataset(std::vector<nn::Tensor>, std::uint64_t);

img::Image random_shapes(std::size_t size, std::mt19937_64& rng) {
  img::Image im(size, size, uniform(rng, 0.2, 0.5));
  const int shapes = 3 + static_cast<int>(rng() % 4);
  const double s = static_cast<double>(size);
  for (int k = 0; k < shapes; ++k) {
    const double level = uniform(rng, 0.0, 1.0);
    const double cx = uniform(rng, 0.1, 0.9) * s, cy = uniform(rng, 0.1, 0.9) * s;
    const double a = uniform(rng, 0.06, 0.22) * s, b = uniform(rng, 0.06, 0.22) * s;
    const bool disc = (rng() & 1) != 0;
    for (std::size_t r = 0; r < size; ++r) {
      for (std::size_t c = 0; c < size; ++c) {
        const double dx = (c + 0.5 - cx) / a, dy = (r + 0.5 - cy) / b;
        const bool inside = disc ? dx * dx + dy * dy <= 1.0 : std::abs(dx) <= 1.0 && std::abs(dy) <= 1.0;
        if (inside) im.at(r, c) = level;
      }
    }
  }
  return im;
}

std::vector<PairedSample> make_blur_sharp_pairs(std::size_t count, std::size_t size,
                                                std::uint64_t seed, double blur_sigma) {
  if (size < 8) throw std::invalid_argument("make_blur_sharp_pairs: size must be at least 8");
  std::mt19937_64 rng(seed);
  std::vector<PairedSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const img::Image sharp = random_shapes(size, rng);
    out.push_back({image_to_tensor(img::gaussian_blur(sharp, blur_sigma)), image_to_tensor(sharp)});
  }
  return out;
}

UnpairedDomains make_unpaired_domains(std::size_t count, std::size_t size, std::uint64_t seed) {
  if (size < 8) throw std::invalid_argument("make_unpaired_domains: size must be at least 8");
  std::mt19937_64 rng(seed);
  UnpairedDomains d;
  for (std::size_t i = 0; i < count; ++i) {
    img::Image scene = random_shapes(size, rng);
    img::Image speckle(size, size);
    for (double& v : speckle.data()) {
      // Rayleigh amplitude with unit mean.
      const double u = uniform(rng, 1e-12, 1.0);
      v = std::sqrt(-2.0 * std::log(u)) / std::sqrt(M_PI / 2.0);
    }
    speckle = img::gaussian_blur(speckle, 0.7);
    for (std::size_t k = 0; k < scene.size(); ++k) {
      scene.data()[k] = std::clamp(scene.data()[k] * speckle.data()[k], 0.0, 1.0);
    }
    d.x.push_back(image_to_tensor(scene));
  }
  for (std::size_t i = 0; i < count; ++i) {
    d.y.push_back(image_to_tensor(img::gaussian_blur(random_shapes(size, rng), 1.0)));
  }
  return d;
}

nn::Tensor augment(const nn::Tensor& image, std::size_t out_size, std::mt19937_64& rng) {
  image.require_nhwc("augment");
  const std::size_t h = image.height(), w = image.width(), c = image.channels();
  if (out_size == 0 || out_size > h || out_size > w) {
    throw std::invalid_argument("augment: crop size " + std::to_string(out_size) +
                                " does not fit image " + nn::shape_string(image.shape()));
  }
  const bool flip = (rng() & 1) != 0;
  const std::size_t oy = static_cast<std::size_t>(rng() % (h - out_size + 1));
  const std::size_t ox = static_cast<std::size_t>(rng() % (w - out_size + 1));
  nn::Tensor out({image.batch(), out_size, out_size, c});
  for (std::size_t n = 0; n < image.batch(); ++n) {
    for (std::size_t y = 0; y < out_size; ++y) {
      for (std::size_t x = 0; x < out_size; ++x) {
        const std::size_t sx = ox + (flip ? out_size - 1 - x : x);
        for (std::size_t k = 0; k < c; ++k) out.at(n, y, x, k) = image.at(n, oy + y, sx, k);
      }
    }
  }
  return out;
}

}  // namespace pwe::train

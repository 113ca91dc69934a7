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
#include <random>
#include <vector>

#include "pwe/imgproc/image.hpp"
#include "pwe/nn/tensor.hpp"

namespace pwe::train {

/// (1, h, w, 1) tensor from an image and back.
nn::Tensor image_to_tensor(const img::Image& image);
img::Image tensor_to_image(const nn::Tensor& tensor);

struct PairedSample {
  nn::Tensor input;
  nn::Tensor target;
};

template <class S>
struct DataSplit {
  std::vector<S> train, validation, test;
};

/// Seeded shuffle followed by an 80/10/10 split (validation and test get at least one sample
/// when there are three or more).
template <class S>
DataSplit<S> split_dataset(std::vector<S> samples, std::uint64_t seed);

/// Piecewise-constant scene of random discs and rectangles on a flat background, in [0, 1].
img::Image random_shapes(std::size_t size, std::mt19937_64& rng);

/// Blur-to-sharp pairs: the target is a random shapes image, the input its Gaussian blur.
std::vector<PairedSample> make_blur_sharp_pairs(std::size_t count, std::size_t size,
                                                std::uint64_t seed, double blur_sigma = 2.0);

/// Two unpaired domains: X holds shape scenes under multiplicative speckle, Y holds smooth
/// shape scenes. Images are `size` pixels square.
struct UnpairedDomains {
  std::vector<nn::Tensor> x, y;
};
UnpairedDomains make_unpaired_domains(std::size_t count, std::size_t size, std::uint64_t seed);

/// Random horizontal flip and random crop to out_size x out_size.
nn::Tensor augment(const nn::Tensor& image, std::size_t out_size, std::mt19937_64& rng);

}  // namespace pwe::train

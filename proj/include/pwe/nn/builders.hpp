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
#include <vector>

#include "pwe/nn/graph.hpp"

namespace pwe::nn {

/// U-Net: stride-2 3x3 encoder convolutions, mirrored stride-2 transposed convolutions with skip
/// concatenations, and a final 1x1 convolution with sigmoid over [upsampled, input].
struct GeneratorConfig {
  ModelRole role = ModelRole::stage1_unet;
  std::size_t height = 512, width = 512, channels = 1;
  std::vector<std::size_t> filters{16, 32, 64, 128, 256};
  std::size_t kernel = 3;
  double alpha = 0.2;
  double eps = 1e-5;
  TransposeSemantics semantics = TransposeSemantics::crop_output;
};

/// PatchGAN: stride-2 4x4 convolutions and a 1x1 convolution to one channel (linear output).
struct DiscriminatorConfig {
  ModelRole role = ModelRole::discriminator_Y;
  std::size_t height = 512, width = 512, channels = 1;
  std::vector<std::size_t> filters{32, 64, 128, 256, 512};
  std::size_t kernel = 4;
  double alpha = 0.2;
  double eps = 1e-5;
  bool spectral_norm = false;
  bool instance_norm = true;
  std::size_t power_iterations = 20;
};

/// Spectral norm for discriminator_X, instance norm for discriminator_Y.
DiscriminatorConfig discriminator_config_for(ModelRole role);

/// Throws std::invalid_argument if height or width is not divisible by 2^filters.size().
GraphSpec build_generator(const GeneratorConfig& config);
GraphSpec build_discriminator(const DiscriminatorConfig& config);

/// Graph without layers: returns its input.
GraphSpec identity_graph(ModelRole role, std::size_t channels = 1);

/// Kernels ~ N(0, stddev), zero biases, unit gamma, zero beta, unit moving variance.
template <class T>
WeightStore<T> init_weights(const GraphSpec& graph, std::uint64_t seed, double stddev = 0.02);

/// Same shapes with every value zero.
template <class T>
WeightStore<T> zero_weights(const GraphSpec& graph);

}  // namespace pwe::nn

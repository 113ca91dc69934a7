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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pwe/nn/graph.hpp"
#include "pwe/nn/tensor.hpp"

namespace pwe::nn {

/// Ordered list of named f32 tensors; the payload of PWNN weight files and PWRA
/// reference-activation files.
using NamedTensors = std::vector<std::pair<std::string, Tensor>>;

inline constexpr std::string_view kWeightsMagic = "PWNN";
inline constexpr std::string_view kActivationsMagic = "PWRA";

/// magic, u32 version, u32 count, then per tensor: u16 name length, name, u8 rank, u32 dims,
/// f32 data.
void write_tensor_file(std::ostream& out, std::string_view magic, const NamedTensors& tensors);
NamedTensors read_tensor_file(std::istream& in, std::string_view magic);

void save_weights(const WeightStore<float>& weights, const std::filesystem::path& path);
WeightStore<float> load_weights(const std::filesystem::path& path);

struct BoundWeights {
  WeightStore<float> weights;
  std::vector<std::string> unused;  // tensors present in the file but not read by the graph
};

/// Loads a weight file for `graph`. Missing or mis-shaped tensors are errors; unused tensors are
/// returned as warnings.
BoundWeights load_weights_for(const GraphSpec& graph, const std::filesystem::path& path);

/// Graph input followed by every layer output, as captured by forward_all.
struct ReferenceActivations {
  Tensor input;
  NamedTensors layers;
};

ReferenceActivations capture_activations(const ModelGraph& model, const Tensor& input);
void save_reference_activations(const ReferenceActivations& ref, const std::filesystem::path& path);
ReferenceActivations load_reference_activations(const std::filesystem::path& path);

}  // namespace pwe::nn

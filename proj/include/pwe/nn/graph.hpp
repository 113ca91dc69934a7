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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pwe/nn/ops.hpp"
#include "pwe/nn/tensor.hpp"

namespace pwe::nn {

enum class LayerKind {
  conv2d,
  conv2d_transpose,
  leaky_relu,
  batch_norm,
  instance_norm,
  concat_skip,
  tanh,
  sigmoid,
};

enum class ModelRole { generator_G, generator_F, discriminator_X, discriminator_Y, stage1_unet };

std::string_view to_string(LayerKind kind);
std::string_view to_string(ModelRole role);
ModelRole parse_model_role(std::string_view text);

/// Name under which the graph input can be referenced by concat_skip layers.
inline constexpr std::string_view kGraphInput = "input";

/// One layer. Every layer consumes the previous layer's output (the graph input for the first);
/// concat_skip additionally appends the output of the layer named by `skip`.
struct LayerSpec {
  std::string name;
  LayerKind kind = LayerKind::conv2d;
  std::size_t kernel_h = 1, kernel_w = 1;
  std::size_t stride = 1;
  std::size_t filters = 1;
  Padding padding = Padding::same;
  TransposeSemantics semantics = TransposeSemantics::crop_output;
  bool use_bias = true;
  bool spectral_norm = false;
  std::size_t power_iterations = 20;
  double alpha = 0.2;
  double eps = 1e-5;
  std::string skip;

  bool has_kernel() const {
    return kind == LayerKind::conv2d || kind == LayerKind::conv2d_transpose;
  }
};

template <class T>
using WeightStore = std::map<std::string, BasicTensor<T>>;

/// Layer topology of a model. An empty layer list is the identity map.
struct GraphSpec {
  ModelRole role = ModelRole::stage1_unet;
  std::size_t input_channels = 1;
  std::vector<LayerSpec> layers;

  /// Structural checks: unique names, positive kernel/stride/filters, skips that reference an
  /// earlier layer or the graph input.
  void validate() const;
  /// Index of the named layer; kGraphInput maps to layers.size().
  std::size_t index_of(std::string_view name) const;
  /// Output channel count of every layer.
  std::vector<std::size_t> channel_counts() const;
  /// Shapes of every weight tensor the graph reads, keyed "<layer>/<param>".
  std::map<std::string, Shape> weight_shapes() const;
  /// Output shape of every layer for an input of the given NHWC shape. Throws naming the layer
  /// whose shapes are incompatible.
  std::vector<Shape> output_shapes(const Shape& input) const;
  Shape output_shape(const Shape& input) const;
};

/// Reports missing or mis-shaped weights (throws std::invalid_argument listing them all) and
/// returns the names of stored tensors the graph does not use.
template <class T>
std::vector<std::string> check_weights(const GraphSpec& graph, const WeightStore<T>& weights);

/// Kernel actually applied by a layer: the stored one, or its spectrally normalized version.
template <class T>
BasicTensor<T> effective_kernel(const LayerSpec& layer, const WeightStore<T>& weights);

template <class T>
BasicTensor<T> apply_layer(const LayerSpec& layer, const WeightStore<T>& weights,
                           const BasicTensor<T>& x, const BasicTensor<T>* skip);

/// Output of every layer, in order. Used for training and parity capture.
template <class T>
std::vector<BasicTensor<T>> forward_all(const GraphSpec& graph, const WeightStore<T>& weights,
                                        const BasicTensor<T>& x);

/// Inference; intermediate activations are released once no later layer needs them.
template <class T>
BasicTensor<T> forward(const GraphSpec& graph, const WeightStore<T>& weights,
                       const BasicTensor<T>& x);

template <class T>
struct BasicModel {
  GraphSpec graph;
  WeightStore<T> weights;

  BasicTensor<T> operator()(const BasicTensor<T>& x) const { return forward(graph, weights, x); }
};

using ModelGraph = BasicModel<float>;

template <class U, class T>
WeightStore<U> cast_weights(const WeightStore<T>& w) {
  WeightStore<U> out;
  for (const auto& [name, t] : w) out.emplace(name, t.template cast<U>());
  return out;
}

}  // namespace pwe::nn

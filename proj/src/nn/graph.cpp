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

#include "pwe/nn/graph.hpp"

#include <stdexcept>
#include <unordered_set>

#include "pwe/nn/spectral_norm.hpp"

namespace pwe::nn {
namespace {

std::string layer_label(const LayerSpec& l) {
  return "layer '" + l.name + "' (" + std::string(to_string(l.kind)) + ")";
}

[[noreturn]] void rethrow_for_layer(const LayerSpec& l, const std::exception& e) {
  throw std::invalid_argument(layer_label(l) + ": " + e.what());
}

template <class T>
const BasicTensor<T>& param(const LayerSpec& l, const WeightStore<T>& w, const char* what) {
  const auto it = w.find(l.name + "/" + what);
  if (it == w.end()) {
    throw std::invalid_argument(layer_label(l) + ": missing weight '" + l.name + "/" + what + "'");
  }
  return it->second;
}

}  // namespace

std::string_view to_string(LayerKind kind) {
  switch (kind) {
    case LayerKind::conv2d: return "conv2d";
    case LayerKind::conv2d_transpose: return "conv2d_transpose";
    case LayerKind::leaky_relu: return "leaky_relu";
    case LayerKind::batch_norm: return "batch_norm";
    case LayerKind::instance_norm: return "instance_norm";
    case LayerKind::concat_skip: return "concat_skip";
    case LayerKind::tanh: return "tanh";
    case LayerKind::sigmoid: return "sigmoid";
  }
  return "unknown";
}

std::string_view to_string(ModelRole role) {
  switch (role) {
    case ModelRole::generator_G: return "generator_G";
    case ModelRole::generator_F: return "generator_F";
    case ModelRole::discriminator_X: return "discriminator_X";
    case ModelRole::discriminator_Y: return "discriminator_Y";
    case ModelRole::stage1_unet: return "stage1_unet";
  }
  return "unknown";
}

ModelRole parse_model_role(std::string_view text) {
  for (ModelRole r : {ModelRole::generator_G, ModelRole::generator_F, ModelRole::discriminator_X,
                      ModelRole::discriminator_Y, ModelRole::stage1_unet}) {
    if (to_string(r) == text) return r;
  }
  throw std::invalid_argument("unknown model role '" + std::string(text) + "'");
}

void GraphSpec::validate() const {
  if (input_channels == 0) throw std::invalid_argument("graph: input_channels must be positive");
  std::unordered_set<std::string> seen;
  for (const LayerSpec& l : layers) {
    if (l.name.empty() || l.name == kGraphInput || l.name.find('/') != std::string::npos) {
      throw std::invalid_argument("graph: invalid layer name '" + l.name + "'");
    }
    if (!seen.insert(l.name).second) {
      throw std::invalid_argument("graph: duplicate layer name '" + l.name + "'");
    }
    if (l.has_kernel()) {
      if (l.kernel_h == 0 || l.kernel_w == 0 || l.stride == 0 || l.filters == 0) {
        throw std::invalid_argument(layer_label(l) + ": kernel, stride and filters must be positive");
      }
      if (l.spectral_norm && l.power_iterations == 0) {
        throw std::invalid_argument(layer_label(l) + ": spectral norm needs power iterations");
      }
    }
    if ((l.kind == LayerKind::batch_norm || l.kind == LayerKind::instance_norm) && !(l.eps > 0.0)) {
      throw std::invalid_argument(layer_label(l) + ": eps must be positive");
    }
    if (l.kind == LayerKind::concat_skip && l.skip != kGraphInput && !seen.contains(l.skip)) {
      throw std::invalid_argument(layer_label(l) + ": skip source '" + l.skip +
                                  "' is not an earlier layer");
    }
  }
}

std::size_t GraphSpec::index_of(std::string_view name) const {
  if (name == kGraphInput) return layers.size();
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (layers[i].name == name) return i;
  }
  throw std::invalid_argument("graph: no layer named '" + std::string(name) + "'");
}

std::vector<std::size_t> GraphSpec::channel_counts() const {
  validate();
  std::vector<std::size_t> c(layers.size());
  std::size_t prev = input_channels;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const LayerSpec& l = layers[i];
    if (l.has_kernel()) {
      c[i] = l.filters;
    } else if (l.kind == LayerKind::concat_skip) {
      const std::size_t j = index_of(l.skip);
      c[i] = prev + (j == layers.size() ? input_channels : c[j]);
    } else {
      c[i] = prev;
    }
    prev = c[i];
  }
  return c;
}

std::map<std::string, Shape> GraphSpec::weight_shapes() const {
  const auto channels = channel_counts();
  std::map<std::string, Shape> shapes;
  std::size_t in = input_channels;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const LayerSpec& l = layers[i];
    const std::string p = l.name + "/";
    switch (l.kind) {
      case LayerKind::conv2d:
        shapes[p + "kernel"] = {l.kernel_h, l.kernel_w, in, l.filters};
        if (l.use_bias) shapes[p + "bias"] = {l.filters};
        break;
      case LayerKind::conv2d_transpose:
        shapes[p + "kernel"] = l.semantics == TransposeSemantics::crop_output
                                   ? Shape{l.kernel_h, l.kernel_w, l.filters, in}
                                   : Shape{l.kernel_h, l.kernel_w, in, l.filters};
        if (l.use_bias) shapes[p + "bias"] = {l.filters};
        break;
      case LayerKind::batch_norm:
        shapes[p + "moving_mean"] = {in};
        shapes[p + "moving_variance"] = {in};
        [[fallthrough]];
      case LayerKind::instance_norm:
        shapes[p + "gamma"] = {in};
        shapes[p + "beta"] = {in};
        break;
      default:
        break;
    }
    in = channels[i];
  }
  return shapes;
}

std::vector<Shape> GraphSpec::output_shapes(const Shape& input) const {
  validate();
  if (input.size() != 4 || input[3] != input_channels) {
    throw std::invalid_argument("graph: input shape " + shape_string(input) +
                                " does not match NHWC with " + std::to_string(input_channels) +
                                " channels");
  }
  std::vector<Shape> out(layers.size());
  Shape prev = input;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const LayerSpec& l = layers[i];
    Shape s = prev;
    try {
      if (l.kind == LayerKind::conv2d) {
        const ConvGeometry g = conv_geometry(prev[1], prev[2], l.kernel_h, l.kernel_w, l.stride, l.padding);
        s = {prev[0], g.out_h, g.out_w, l.filters};
      } else if (l.kind == LayerKind::conv2d_transpose) {
        s = {prev[0], prev[1] * l.stride, prev[2] * l.stride, l.filters};
      } else if (l.kind == LayerKind::concat_skip) {
        const std::size_t j = index_of(l.skip);
        const Shape& other = j == layers.size() ? input : out[j];
        if (other[0] != prev[0] || other[1] != prev[1] || other[2] != prev[2]) {
          throw std::invalid_argument("cannot concatenate " + shape_string(prev) + " with '" +
                                      l.skip + "' of shape " + shape_string(other));
        }
        s[3] = prev[3] + other[3];
      }
    } catch (const std::invalid_argument& e) {
      rethrow_for_layer(l, e);
    }
    out[i] = s;
    prev = s;
  }
  return out;
}

Shape GraphSpec::output_shape(const Shape& input) const {
  const auto all = output_shapes(input);
  return all.empty() ? input : all.back();
}

template <class T>
std::vector<std::string> check_weights(const GraphSpec& graph, const WeightStore<T>& weights) {
  const auto expected = graph.weight_shapes();
  std::string problems;
  for (const auto& [name, shape] : expected) {
    const auto it = weights.find(name);
    if (it == weights.end()) {
      problems += "\n  missing tensor '" + name + "' " + shape_string(shape);
    } else if (it->second.shape() != shape) {
      problems += "\n  tensor '" + name + "' has shape " + shape_string(it->second.shape()) +
                  ", graph expects " + shape_string(shape);
    }
  }
  if (!problems.empty()) {
    throw std::invalid_argument("weights do not match graph " +
                                std::string(to_string(graph.role)) + ":" + problems);
  }
  std::vector<std::string> unused;
  for (const auto& [name, t] : weights) {
    if (!expected.contains(name)) unused.push_back(name);
  }
  return unused;
}

template <class T>
BasicTensor<T> effective_kernel(const LayerSpec& layer, const WeightStore<T>& weights) {
  const BasicTensor<T>& k = param(layer, weights, "kernel");
  if (!layer.spectral_norm) return k;
  return spectral_normalize(k, layer.power_iterations).normalized;
}

template <class T>
BasicTensor<T> apply_layer(const LayerSpec& l, const WeightStore<T>& w, const BasicTensor<T>& x,
                           const BasicTensor<T>* skip) {
  static const BasicTensor<T> no_bias;
  try {
    switch (l.kind) {
      case LayerKind::conv2d:
        return conv2d(x, effective_kernel(l, w), l.use_bias ? param(l, w, "bias") : no_bias,
                      l.stride, l.padding);
      case LayerKind::conv2d_transpose:
        return conv2d_transpose(x, effective_kernel(l, w),
                                l.use_bias ? param(l, w, "bias") : no_bias, l.stride, l.semantics);
      case LayerKind::leaky_relu:
        return leaky_relu(x, l.alpha);
      case LayerKind::batch_norm:
        return batch_norm_inference(x, param(l, w, "moving_mean"), param(l, w, "moving_variance"),
                                    param(l, w, "gamma"), param(l, w, "beta"), l.eps);
      case LayerKind::instance_norm:
        return instance_norm(x, param(l, w, "gamma"), param(l, w, "beta"), l.eps);
      case LayerKind::concat_skip:
        if (skip == nullptr) throw std::invalid_argument("skip input not provided");
        return concat_channels(x, *skip);
      case LayerKind::tanh:
        return nn::tanh(x);
      case LayerKind::sigmoid:
        return sigmoid(x);
    }
  } catch (const std::invalid_argument& e) {
    if (std::string_view(e.what()).starts_with("layer '")) throw;
    rethrow_for_layer(l, e);
  }
  throw std::invalid_argument(layer_label(l) + ": unsupported layer kind");
}

template <class T>
std::vector<BasicTensor<T>> forward_all(const GraphSpec& graph, const WeightStore<T>& weights,
                                        const BasicTensor<T>& x) {
  graph.output_shapes(x.shape());
  std::vector<BasicTensor<T>> out;
  out.reserve(graph.layers.size());
  for (std::size_t i = 0; i < graph.layers.size(); ++i) {
    const LayerSpec& l = graph.layers[i];
    const BasicTensor<T>& in = i == 0 ? x : out[i - 1];
    const BasicTensor<T>* skip = nullptr;
    if (l.kind == LayerKind::concat_skip) {
      const std::size_t j = graph.index_of(l.skip);
      skip = j == graph.layers.size() ? &x : &out[j];
    }
    out.push_back(apply_layer(l, weights, in, skip));
  }
  return out;
}

template <class T>
BasicTensor<T> forward(const GraphSpec& graph, const WeightStore<T>& weights,
                       const BasicTensor<T>& x) {
  graph.output_shapes(x.shape());
  const std::size_t n = graph.layers.size();
  if (n == 0) return x;
  // last_use[i]: index of the last layer reading output i.
  std::vector<std::size_t> last_use(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) last_use[i - 1] = std::max(last_use[i - 1], i);
    const LayerSpec& l = graph.layers[i];
    if (l.kind == LayerKind::concat_skip) {
      const std::size_t j = graph.index_of(l.skip);
      if (j < n) last_use[j] = std::max(last_use[j], i);
    }
  }
  std::vector<BasicTensor<T>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const LayerSpec& l = graph.layers[i];
    const BasicTensor<T>& in = i == 0 ? x : out[i - 1];
    const BasicTensor<T>* skip = nullptr;
    if (l.kind == LayerKind::concat_skip) {
      const std::size_t j = graph.index_of(l.skip);
      skip = j == n ? &x : &out[j];
    }
    out[i] = apply_layer(l, weights, in, skip);
    for (std::size_t j = 0; j < i; ++j) {
      if (last_use[j] <= i && !out[j].empty()) out[j] = BasicTensor<T>();
    }
  }
  return std::move(out.back());
}

#define PWE_INSTANTIATE_GRAPH(T)                                                                 \
  template std::vector<std::string> check_weights(const GraphSpec&, const WeightStore<T>&);     \
  template BasicTensor<T> effective_kernel(const LayerSpec&, const WeightStore<T>&);            \
  template BasicTensor<T> apply_layer(const LayerSpec&, const WeightStore<T>&,                  \
                                      const BasicTensor<T>&, const BasicTensor<T>*);            \
  template std::vector<BasicTensor<T>> forward_all(const GraphSpec&, const WeightStore<T>&,     \
                                                   const BasicTensor<T>&);                      \
  template BasicTensor<T> forward(const GraphSpec&, const WeightStore<T>&, const BasicTensor<T>&);

PWE_INSTANTIATE_GRAPH(float)
PWE_INSTANTIATE_GRAPH(double)

}  // namespace pwe::nn

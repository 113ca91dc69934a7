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

#include "pwe/nn/builders.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace pwe::nn {
namespace {

void require_divisible(const char* what, std::size_t h, std::size_t w, std::size_t levels) {
  const std::size_t f = std::size_t{1} << levels;
  if (h == 0 || w == 0 || h % f != 0 || w % f != 0) {
    throw std::invalid_argument(std::string(what) + ": resolution " + std::to_string(h) + "x" +
                                std::to_string(w) + " is not divisible by 2^" +
                                std::to_string(levels) + " = " + std::to_string(f));
  }
}

LayerSpec conv(std::string name, LayerKind kind, std::size_t k, std::size_t stride, std::size_t filters) {
  LayerSpec l;
  l.name = std::move(name);
  l.kind = kind;
  l.kernel_h = l.kernel_w = k;
  l.stride = stride;
  l.filters = filters;
  return l;
}

LayerSpec simple(std::string name, LayerKind kind) {
  LayerSpec l;
  l.name = std::move(name);
  l.kind = kind;
  return l;
}

LayerSpec act(std::string name, double alpha) {
  LayerSpec l = simple(std::move(name), LayerKind::leaky_relu);
  l.alpha = alpha;
  return l;
}

LayerSpec norm(std::string name, double eps) {
  LayerSpec l = simple(std::move(name), LayerKind::instance_norm);
  l.eps = eps;
  return l;
}

}  // namespace

DiscriminatorConfig discriminator_config_for(ModelRole role) {
  DiscriminatorConfig c;
  c.role = role;
  c.spectral_norm = role == ModelRole::discriminator_X;
  c.instance_norm = !c.spectral_norm;
  return c;
}

GraphSpec build_generator(const GeneratorConfig& c) {
  if (c.filters.empty()) throw std::invalid_argument("build_generator: no encoder levels");
  if (c.channels == 0 || c.kernel == 0) {
    throw std::invalid_argument("build_generator: channels and kernel must be positive");
  }
  require_divisible("build_generator", c.height, c.width, c.filters.size());
  GraphSpec g;
  g.role = c.role;
  g.input_channels = c.channels;
  const std::size_t depth = c.filters.size();
  std::vector<std::string> skips;
  for (std::size_t i = 0; i < depth; ++i) {
    const std::string p = "enc" + std::to_string(i + 1);
    g.layers.push_back(conv(p + "_conv", LayerKind::conv2d, c.kernel, 2, c.filters[i]));
    if (i > 0) g.layers.push_back(norm(p + "_norm", c.eps));
    g.layers.push_back(act(p + "_act", c.alpha));
    skips.push_back(p + "_act");
  }
  for (std::size_t i = depth; i-- > 0;) {
    const std::string p = "dec" + std::to_string(i);
    LayerSpec up = conv(p + "_conv", LayerKind::conv2d_transpose, c.kernel, 2, c.filters[i == 0 ? 0 : i - 1]);
    up.semantics = c.semantics;
    g.layers.push_back(up);
    g.layers.push_back(norm(p + "_norm", c.eps));
    g.layers.push_back(act(p + "_act", c.alpha));
    LayerSpec cat = simple(p + "_skip", LayerKind::concat_skip);
    cat.skip = i == 0 ? std::string(kGraphInput) : skips[i - 1];
    g.layers.push_back(cat);
  }
  g.layers.push_back(conv("out_conv", LayerKind::conv2d, 1, 1, c.channels));
  g.layers.push_back(simple("out_sigmoid", LayerKind::sigmoid));
  g.validate();
  return g;
}

GraphSpec build_discriminator(const DiscriminatorConfig& c) {
  if (c.filters.empty()) throw std::invalid_argument("build_discriminator: no levels");
  if (c.channels == 0 || c.kernel == 0) {
    throw std::invalid_argument("build_discriminator: channels and kernel must be positive");
  }
  require_divisible("build_discriminator", c.height, c.width, c.filters.size());
  GraphSpec g;
  g.role = c.role;
  g.input_channels = c.channels;
  for (std::size_t i = 0; i < c.filters.size(); ++i) {
    const std::string p = "conv" + std::to_string(i + 1);
    LayerSpec l = conv(p, LayerKind::conv2d, c.kernel, 2, c.filters[i]);
    l.spectral_norm = c.spectral_norm;
    l.power_iterations = c.power_iterations;
    g.layers.push_back(l);
    if (c.instance_norm && i > 0) g.layers.push_back(norm(p + "_norm", c.eps));
    g.layers.push_back(act(p + "_act", c.alpha));
  }
  LayerSpec out = conv("patch", LayerKind::conv2d, 1, 1, 1);
  out.spectral_norm = c.spectral_norm;
  out.power_iterations = c.power_iterations;
  g.layers.push_back(out);
  g.validate();
  return g;
}

GraphSpec identity_graph(ModelRole role, std::size_t channels) {
  GraphSpec g;
  g.role = role;
  g.input_channels = channels;
  return g;
}

template <class T>
WeightStore<T> init_weights(const GraphSpec& graph, std::uint64_t seed, double stddev) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, stddev);
  WeightStore<T> w;
  // weight_shapes() is name-ordered, which fixes the draw order.
  for (const auto& [name, shape] : graph.weight_shapes()) {
    BasicTensor<T> t(shape);
    const std::string_view param = std::string_view(name).substr(name.rfind('/') + 1);
    if (param == "kernel") {
      for (T& v : t.values()) v = static_cast<T>(normal(rng));
    } else if (param == "gamma" || param == "moving_variance") {
      t.fill(T(1));
    }
    w.emplace(name, std::move(t));
  }
  return w;
}

template <class T>
WeightStore<T> zero_weights(const GraphSpec& graph) {
  WeightStore<T> w;
  for (const auto& [name, shape] : graph.weight_shapes()) w.emplace(name, BasicTensor<T>(shape));
  return w;
}

template WeightStore<float> init_weights(const GraphSpec&, std::uint64_t, double);
template WeightStore<double> init_weights(const GraphSpec&, std::uint64_t, double);
template WeightStore<float> zero_weights(const GraphSpec&);
template WeightStore<double> zero_weights(const GraphSpec&);

}  // namespace pwe::nn

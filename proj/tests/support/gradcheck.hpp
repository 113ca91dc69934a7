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

// Central finite-difference checks of the reverse-mode pass, one small graph per layer kind.

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "pwe/nn/graph.hpp"
#include "pwe/train/backward.hpp"
#include "support/nn_oracles.hpp"

namespace pwe::testing {

struct GradCheckResult {
  double worst = 0.0;       // largest per-tensor norm-relative error
  std::string worst_tensor;
  std::size_t checked = 0;  // perturbed elements
  std::size_t skipped = 0;  // elements whose stencil crosses a leaky-ReLU kink at every step size
};

namespace detail {

inline double linear_loss(const nn::GraphSpec& g, const nn::WeightStore<double>& w,
                          const nn::TensorD& x, const nn::TensorD& c) {
  const nn::TensorD y = nn::forward(g, w, x);
  double s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) s += c[i] * y[i];
  return s;
}

// Sign pattern of every leaky-ReLU input.
inline std::vector<bool> kink_signature(const nn::GraphSpec& g, const nn::WeightStore<double>& w,
                                        const nn::TensorD& x) {
  const auto outs = nn::forward_all(g, w, x);
  std::vector<bool> sig;
  for (std::size_t i = 0; i < g.layers.size(); ++i) {
    if (g.layers[i].kind != nn::LayerKind::leaky_relu) continue;
    const nn::TensorD& in = i == 0 ? x : outs[i - 1];
    for (double v : in.values()) sig.push_back(v >= 0.0);
  }
  return sig;
}

inline double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace detail

/// Compares backward() with central differences of L = sum(c * forward(x)) for every trainable
/// weight element and every input element. Stencils that flip a leaky-ReLU sign are retried with
/// smaller steps and skipped if no step avoids the kink.
inline GradCheckResult check_graph_gradients(const nn::GraphSpec& g, nn::WeightStore<double> w,
                                             nn::TensorD x, std::uint64_t seed, double h = 1e-4) {
  const nn::TensorD c = random_tensor(g.output_shape(x.shape()), seed * 7 + 3);
  const auto outs = nn::forward_all(g, w, x);
  const auto analytic = train::backward(g, w, x, outs, c);
  const auto base_sig = detail::kink_signature(g, w, x);
  GradCheckResult r;

  auto check_tensor = [&](const std::string& name, nn::TensorD& target, const nn::TensorD& grad) {
    std::vector<double> a, fd;
    for (std::size_t i = 0; i < target.size(); ++i) {
      const double orig = target[i];
      bool ok = false;
      double d = 0.0;
      for (double step : {h, h * 1e-2, h * 1e-4}) {
        target[i] = orig + step;
        const bool plus_ok = detail::kink_signature(g, w, x) == base_sig;
        const double lp = detail::linear_loss(g, w, x, c);
        target[i] = orig - step;
        const bool minus_ok = detail::kink_signature(g, w, x) == base_sig;
        const double lm = detail::linear_loss(g, w, x, c);
        target[i] = orig;
        if (plus_ok && minus_ok) {
          d = (lp - lm) / (2.0 * step);
          ok = true;
          break;
        }
      }
      if (!ok) {
        ++r.skipped;
        continue;
      }
      ++r.checked;
      a.push_back(grad[i]);
      fd.push_back(d);
    }
    std::vector<double> diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - fd[i];
    const double scale = std::max(detail::norm(a), detail::norm(fd));
    // Tensors whose true gradient vanishes (e.g. a bias feeding a normalization) are compared
    // on an absolute scale.
    const double err = scale > 1e-7 ? detail::norm(diff) / scale : detail::norm(diff);
    if (err > r.worst) {
      r.worst = err;
      r.worst_tensor = name;
    }
  };

  for (auto& [name, t] : w) {
    if (!train::is_trainable(name)) continue;
    const auto it = analytic.weights.find(name);
    if (it == analytic.weights.end()) {
      r.worst = std::max(r.worst, 1.0);
      r.worst_tensor = name + " (no analytic gradient)";
      continue;
    }
    check_tensor(name, t, it->second);
  }
  check_tensor("input", x, analytic.input);
  return r;
}

/// Randomizes every parameter, keeping variances positive.
inline nn::WeightStore<double> random_weights(const nn::GraphSpec& g, std::uint64_t seed) {
  nn::WeightStore<double> w;
  std::uint64_t k = seed * 1000;
  for (const auto& [name, shape] : g.weight_shapes()) {
    nn::TensorD t = random_tensor(shape, ++k, 0.6);
    if (name.ends_with("/moving_variance")) {
      for (double& v : t.values()) v = 0.5 + std::abs(v);
    } else if (name.ends_with("/gamma")) {
      for (double& v : t.values()) v += 1.0;
    }
    w.emplace(name, std::move(t));
  }
  return w;
}

namespace detail {

inline nn::LayerSpec conv(const std::string& name, std::size_t k, std::size_t stride,
                          std::size_t filters, nn::Padding pad = nn::Padding::same) {
  nn::LayerSpec l;
  l.name = name;
  l.kind = nn::LayerKind::conv2d;
  l.kernel_h = l.kernel_w = k;
  l.stride = stride;
  l.filters = filters;
  l.padding = pad;
  return l;
}

inline nn::LayerSpec convt(const std::string& name, std::size_t k, std::size_t filters,
                           nn::TransposeSemantics sem) {
  nn::LayerSpec l = conv(name, k, 2, filters);
  l.kind = nn::LayerKind::conv2d_transpose;
  l.semantics = sem;
  return l;
}

inline nn::LayerSpec simple(const std::string& name, nn::LayerKind kind) {
  nn::LayerSpec l;
  l.name = name;
  l.kind = kind;
  return l;
}

}  // namespace detail

/// Small graphs on an 8x8x2 input, keyed by the layer kind each one exercises.
inline std::map<std::string, nn::GraphSpec> gradient_check_graphs() {
  using detail::conv;
  using detail::convt;
  using detail::simple;
  using nn::LayerKind;
  std::map<std::string, nn::GraphSpec> out;
  auto make = [](std::vector<nn::LayerSpec> layers) {
    nn::GraphSpec g;
    g.input_channels = 2;
    g.layers = std::move(layers);
    g.validate();
    return g;
  };
  out["conv2d"] = make({conv("a", 3, 1, 3), simple("act", LayerKind::leaky_relu),
                        conv("b", 3, 2, 2, nn::Padding::valid)});
  nn::LayerSpec sn1 = conv("a", 3, 2, 4), sn2 = conv("b", 1, 1, 2);
  sn1.spectral_norm = sn2.spectral_norm = true;
  sn1.power_iterations = sn2.power_iterations = 500;
  out["conv2d_spectral_norm"] = make({sn1, simple("act", LayerKind::leaky_relu), sn2});
  out["conv2d_transpose_crop_output"] =
      make({convt("up", 4, 3, nn::TransposeSemantics::crop_output), simple("act", LayerKind::leaky_relu),
            conv("b", 3, 2, 2)});
  out["conv2d_transpose_pad_input"] =
      make({convt("up", 3, 3, nn::TransposeSemantics::pad_input), simple("act", LayerKind::tanh),
            conv("b", 1, 1, 2)});
  out["leaky_relu"] = make({conv("a", 3, 1, 3), simple("act", LayerKind::leaky_relu), conv("b", 1, 1, 2)});
  out["batch_norm"] = make({conv("a", 3, 1, 3), simple("bn", LayerKind::batch_norm), conv("b", 3, 1, 2)});
  out["instance_norm"] = make({conv("a", 3, 1, 3), simple("in", LayerKind::instance_norm), conv("b", 3, 1, 2)});
  nn::LayerSpec skip1 = simple("skip1", LayerKind::concat_skip), skip2 = simple("skip2", LayerKind::concat_skip);
  skip1.skip = "act";
  skip2.skip = "input";
  out["concat_skip"] = make({conv("a", 3, 1, 3), simple("act", LayerKind::leaky_relu), conv("down", 3, 2, 4),
                             convt("up", 3, 2, nn::TransposeSemantics::crop_output), skip1, skip2,
                             conv("b", 1, 1, 2)});
  out["tanh"] = make({conv("a", 3, 1, 3), simple("t", LayerKind::tanh), conv("b", 3, 1, 2)});
  out["sigmoid"] = make({conv("a", 3, 1, 3), simple("s", LayerKind::sigmoid), conv("b", 3, 1, 2)});
  return out;
}

}  // namespace pwe::testing

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

#include <vector>

#include "pwe/nn/graph.hpp"
#include "pwe/nn/ops.hpp"
#include "pwe/nn/tensor.hpp"

namespace pwe::train {

using nn::BasicTensor;
using nn::WeightStore;

/// Parameters updated by the optimizer: kernels, biases and normalization affine terms.
bool is_trainable(std::string_view weight_name);

template <class T>
struct GraphGradients {
  WeightStore<T> weights;  // trainable tensors only
  BasicTensor<T> input;
};

/// Reverse-mode pass through `graph` given the input, the outputs recorded by nn::forward_all,
/// and dLoss/dOutput.
template <class T>
GraphGradients<T> backward(const nn::GraphSpec& graph, const WeightStore<T>& weights,
                           const BasicTensor<T>& x, const std::vector<BasicTensor<T>>& outputs,
                           const BasicTensor<T>& grad_output);

/// into += g, creating missing entries.
template <class T>
void accumulate(WeightStore<T>& into, const WeightStore<T>& g);

template <class T>
void scale(WeightStore<T>& g, double factor);

// Layer-level gradients. `w` is the kernel actually applied.
template <class T>
struct ConvGradients {
  BasicTensor<T> input, kernel, bias;
};

template <class T>
ConvGradients<T> conv2d_backward(const BasicTensor<T>& x, const BasicTensor<T>& w,
                                 const BasicTensor<T>& dy, std::size_t stride, nn::Padding padding);

template <class T>
ConvGradients<T> conv2d_transpose_backward(const BasicTensor<T>& x, const BasicTensor<T>& w,
                                           const BasicTensor<T>& dy, std::size_t stride,
                                           nn::TransposeSemantics semantics);

/// Maps dLoss/d(W / sigma(W)) to dLoss/dW.
template <class T>
BasicTensor<T> spectral_norm_backward(const BasicTensor<T>& w, const BasicTensor<T>& grad_normalized,
                                      std::size_t iterations);

}  // namespace pwe::train

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

#include "pwe/nn/tensor.hpp"

namespace pwe::nn {

enum class Padding { same, valid };

/// Transposed-convolution conventions.
///
/// crop_output: kernel (kh, kw, out, in); the input is scattered with stride s into a
/// ((in-1)s + k)-sized buffer which is then cropped to in*s starting at transpose_crop(k, s).
///
/// pad_input: kernel (kh, kw, in, out); the input is dilated by s, padded by
/// k - 1 - transpose_crop(k, s) in front and cross-correlated at stride 1. Kernels convert
/// between the two with convert_transpose_kernel.
enum class TransposeSemantics { crop_output, pad_input };

std::string_view to_string(Padding p);
std::string_view to_string(TransposeSemantics s);

struct ConvGeometry {
  std::size_t out_h = 0, out_w = 0;
  std::size_t pad_top = 0, pad_left = 0;
};

/// Output size and leading padding of a strided convolution ("same" pads like TensorFlow).
ConvGeometry conv_geometry(std::size_t in_h, std::size_t in_w, std::size_t kh, std::size_t kw,
                           std::size_t stride, Padding padding);

std::size_t transpose_crop(std::size_t kernel, std::size_t stride);

/// Cross-correlation. x: (n, h, w, cin); w: (kh, kw, cin, cout); b: (cout) or empty.
template <class T>
BasicTensor<T> conv2d(const BasicTensor<T>& x, const BasicTensor<T>& w, const BasicTensor<T>& b,
                      std::size_t stride, Padding padding);

/// Upsampling by `stride`; output spatial size is input size times stride.
template <class T>
BasicTensor<T> conv2d_transpose(const BasicTensor<T>& x, const BasicTensor<T>& w,
                                const BasicTensor<T>& b, std::size_t stride,
                                TransposeSemantics semantics);

/// Spatial flip plus in/out axis swap. Maps a kernel of one semantics to the other and is its
/// own inverse.
template <class T>
BasicTensor<T> convert_transpose_kernel(const BasicTensor<T>& w);

template <class T>
BasicTensor<T> leaky_relu(const BasicTensor<T>& x, double alpha);
template <class T>
BasicTensor<T> tanh(const BasicTensor<T>& x);
template <class T>
BasicTensor<T> sigmoid(const BasicTensor<T>& x);

template <class T>
BasicTensor<T> batch_norm_inference(const BasicTensor<T>& x, const BasicTensor<T>& mean,
                                    const BasicTensor<T>& var, const BasicTensor<T>& gamma,
                                    const BasicTensor<T>& beta, double eps);

/// Normalizes every (sample, channel) plane by its own mean and population variance.
template <class T>
BasicTensor<T> instance_norm(const BasicTensor<T>& x, const BasicTensor<T>& gamma,
                             const BasicTensor<T>& beta, double eps);

/// Channel concatenation of two NHWC tensors with equal batch and spatial size.
template <class T>
BasicTensor<T> concat_channels(const BasicTensor<T>& a, const BasicTensor<T>& b);

}  // namespace pwe::nn

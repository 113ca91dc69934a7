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
#include <vector>

#include "pwe/nn/tensor.hpp"

namespace pwe::nn {

/// Largest-singular-value estimate of a kernel viewed as an (out_channels x rest) matrix, where
/// out_channels is the last kernel axis.
struct SingularEstimate {
  double sigma = 0.0;
  std::vector<double> u;  // left vector, length out_channels
  std::vector<double> v;  // right vector, length rest
};

/// Power iteration from a fixed start vector, so repeated calls agree bit for bit.
template <class T>
SingularEstimate estimate_spectral_norm(const BasicTensor<T>& w, std::size_t iterations);

template <class T>
struct SpectralNormResult {
  BasicTensor<T> normalized;
  SingularEstimate estimate;
};

/// Returns w / sigma. Throws std::invalid_argument for a zero kernel or zero iterations.
template <class T>
SpectralNormResult<T> spectral_normalize(const BasicTensor<T>& w, std::size_t iterations);

}  // namespace pwe::nn

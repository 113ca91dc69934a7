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

#include "pwe/nn/tensor.hpp"

namespace pwe::train {

using nn::BasicTensor;

/// Mean absolute difference.
template <class T>
double l1_loss(const BasicTensor<T>& pred, const BasicTensor<T>& target);
/// Mean squared difference.
template <class T>
double mse_loss(const BasicTensor<T>& pred, const BasicTensor<T>& target);
/// Mean squared difference to a constant target (LSGAN real/fake labels).
template <class T>
double mse_to_constant(const BasicTensor<T>& pred, double target);

/// d l1 / d pred with sign(0) = 0.
template <class T>
BasicTensor<T> l1_grad(const BasicTensor<T>& pred, const BasicTensor<T>& target, double weight = 1.0);
template <class T>
BasicTensor<T> mse_grad(const BasicTensor<T>& pred, const BasicTensor<T>& target, double weight = 1.0);
template <class T>
BasicTensor<T> mse_to_constant_grad(const BasicTensor<T>& pred, double target, double weight = 1.0);

}  // namespace pwe::train

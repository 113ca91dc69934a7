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

#include "pwe/train/losses.hpp"

#include <cmath>
#include <stdexcept>

namespace pwe::train {
namespace {

template <class T>
void check(const char* op, const BasicTensor<T>& a, const BasicTensor<T>& b) {
  if (a.shape() != b.shape()) {
    throw std::invalid_argument(std::string(op) + ": prediction shape " + nn::shape_string(a.shape()) +
                                " differs from target shape " + nn::shape_string(b.shape()));
  }
  if (a.empty()) throw std::invalid_argument(std::string(op) + ": empty tensors");
}

}  // namespace

template <class T>
double l1_loss(const BasicTensor<T>& pred, const BasicTensor<T>& target) {
  check("l1_loss", pred, target);
  double s = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) s += std::abs(static_cast<double>(pred[i]) - target[i]);
  return s / static_cast<double>(pred.size());
}

template <class T>
double mse_loss(const BasicTensor<T>& pred, const BasicTensor<T>& target) {
  check("mse_loss", pred, target);
  double s = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double d = static_cast<double>(pred[i]) - target[i];
    s += d * d;
  }
  return s / static_cast<double>(pred.size());
}

template <class T>
double mse_to_constant(const BasicTensor<T>& pred, double target) {
  if (pred.empty()) throw std::invalid_argument("mse_loss: empty tensor");
  double s = 0.0;
  for (T v : pred.values()) s += (v - target) * (v - target);
  return s / static_cast<double>(pred.size());
}

template <class T>
BasicTensor<T> l1_grad(const BasicTensor<T>& pred, const BasicTensor<T>& target, double weight) {
  check("l1_loss", pred, target);
  const double k = weight / static_cast<double>(pred.size());
  BasicTensor<T> g(pred.shape());
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const T d = pred[i] - target[i];
    g[i] = static_cast<T>(d > T(0) ? k : (d < T(0) ? -k : 0.0));
  }
  return g;
}

template <class T>
BasicTensor<T> mse_grad(const BasicTensor<T>& pred, const BasicTensor<T>& target, double weight) {
  check("mse_loss", pred, target);
  const double k = 2.0 * weight / static_cast<double>(pred.size());
  BasicTensor<T> g(pred.shape());
  for (std::size_t i = 0; i < pred.size(); ++i) g[i] = static_cast<T>(k * (static_cast<double>(pred[i]) - target[i]));
  return g;
}

template <class T>
BasicTensor<T> mse_to_constant_grad(const BasicTensor<T>& pred, double target, double weight) {
  const double k = 2.0 * weight / static_cast<double>(pred.size());
  BasicTensor<T> g(pred.shape());
  for (std::size_t i = 0; i < pred.size(); ++i) g[i] = static_cast<T>(k * (pred[i] - target));
  return g;
}

#define PWE_INSTANTIATE_LOSSES(T)                                                       \
  template double l1_loss(const BasicTensor<T>&, const BasicTensor<T>&);               \
  template double mse_loss(const BasicTensor<T>&, const BasicTensor<T>&);              \
  template double mse_to_constant(const BasicTensor<T>&, double);                      \
  template BasicTensor<T> l1_grad(const BasicTensor<T>&, const BasicTensor<T>&, double); \
  template BasicTensor<T> mse_grad(const BasicTensor<T>&, const BasicTensor<T>&, double); \
  template BasicTensor<T> mse_to_constant_grad(const BasicTensor<T>&, double, double);

PWE_INSTANTIATE_LOSSES(float)
PWE_INSTANTIATE_LOSSES(double)

}  // namespace pwe::train

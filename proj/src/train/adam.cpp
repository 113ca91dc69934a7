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

#include "pwe/train/adam.hpp"

#include <cmath>
#include <stdexcept>

namespace pwe::train {

template <class T>
void adam_step(AdamState<T>& s, nn::WeightStore<T>& weights, const nn::WeightStore<T>& grads,
               double lr) {
  const AdamConfig& c = s.config;
  for (const auto& [name, g] : grads) {
    const auto it = weights.find(name);
    if (it == weights.end()) throw std::invalid_argument("adam_step: no weight named '" + name + "'");
    if (it->second.shape() != g.shape()) {
      throw std::invalid_argument("adam_step: gradient shape " + nn::shape_string(g.shape()) +
                                  " differs from weight '" + name + "' " +
                                  nn::shape_string(it->second.shape()));
    }
  }
  ++s.step;
  const double t = static_cast<double>(s.step);
  const double c1 = 1.0 - std::pow(c.beta1, t);
  const double c2 = 1.0 - std::pow(c.beta2, t);
  for (const auto& [name, g] : grads) {
    auto& w = weights.at(name);
    auto& m = s.m.try_emplace(name, g.shape()).first->second;
    auto& v = s.v.try_emplace(name, g.shape()).first->second;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double gi = g[i];
      const double mi = c.beta1 * m[i] + (1.0 - c.beta1) * gi;
      const double vi = c.beta2 * v[i] + (1.0 - c.beta2) * gi * gi;
      m[i] = static_cast<T>(mi);
      v[i] = static_cast<T>(vi);
      w[i] = static_cast<T>(w[i] - lr * (mi / c1) / (std::sqrt(vi / c2) + c.eps));
    }
  }
}

template void adam_step(AdamState<float>&, nn::WeightStore<float>&, const nn::WeightStore<float>&, double);
template void adam_step(AdamState<double>&, nn::WeightStore<double>&, const nn::WeightStore<double>&, double);

}  // namespace pwe::train

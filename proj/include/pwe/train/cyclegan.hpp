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

#include <cstdint>
#include <vector>

#include "pwe/nn/builders.hpp"
#include "pwe/nn/graph.hpp"
#include "pwe/train/adam.hpp"
#include "pwe/train/schedule.hpp"
#include "pwe/train/training_log.hpp"

namespace pwe::train {

using nn::BasicTensor;

struct LossWeights {
  double lambda_G = 1.0;
  double lambda_F = 0.1;
  double identity_weight = 0.5;

  void validate() const;
};

/// G: X -> Y, F: Y -> X; D_X judges domain X, D_Y judges domain Y.
template <class T>
struct CycleGanModels {
  nn::BasicModel<T> G, F, DX, DY;
};

/// Generator terms are reported already weighted, so gen_G = adv_G + cyc_G + id_G.
///   adv_G = lambda_G * mse(D_Y(G(x)), 1)    cyc_G = l1(F(G(x)), x)    id_G = w_id * l1(G(y), y)
///   adv_F = lambda_F * mse(D_X(F(y)), 1)    cyc_F = l1(G(F(y)), y)    id_F = w_id * l1(F(x), x)
///   disc_Y = (mse(D_Y(y), 1) + mse(D_Y(G(x)), 0)) / 2, disc_X likewise.
struct CycleLosses {
  double adv_G = 0, cyc_G = 0, id_G = 0, gen_G = 0;
  double adv_F = 0, cyc_F = 0, id_F = 0, gen_F = 0;
  double disc_X = 0, disc_Y = 0;

  double cycle() const { return cyc_G + cyc_F; }
};

template <class T>
CycleLosses cyclegan_losses(const CycleGanModels<T>& m, const BasicTensor<T>& x,
                            const BasicTensor<T>& y, const LossWeights& w);

template <class T>
struct GeneratorGradients {
  nn::WeightStore<T> G, F;
};

/// Gradients of gen_G + gen_F with respect to both generators (discriminators held fixed).
template <class T>
GeneratorGradients<T> generator_gradients(const CycleGanModels<T>& m, const BasicTensor<T>& x,
                                          const BasicTensor<T>& y, const LossWeights& w,
                                          CycleLosses* losses = nullptr);

/// Gradient of the LSGAN discriminator loss (mse(D(real), 1) + mse(D(fake), 0)) / 2.
template <class T>
nn::WeightStore<T> discriminator_gradients(const nn::BasicModel<T>& d, const BasicTensor<T>& real,
                                           const BasicTensor<T>& fake, double* loss = nullptr);

template <class T>
struct CycleGanOptimizers {
  AdamState<T> G, F, DX, DY;
};

/// One training step: update D_X, then D_Y (against the current generators' fakes), then G and
/// F jointly. Discriminator losses are those before their update; generator losses are those
/// of the generator step.
template <class T>
CycleLosses cyclegan_step(CycleGanModels<T>& m, CycleGanOptimizers<T>& opt, const BasicTensor<T>& x,
                          const BasicTensor<T>& y, const LossWeights& w, double lr);

struct CycleGanConfig {
  std::size_t image_size = 64;
  std::size_t source_size = 72;  // samples are generated larger and randomly cropped
  std::vector<std::size_t> generator_filters{8, 16, 32};
  std::vector<std::size_t> discriminator_filters{16, 32, 64};
  std::size_t samples = 60;  // per domain, split 80/10/10
  std::size_t steps = 500;
  LrSchedule schedule = LrSchedule::cyclegan_default().scaled(0.05);
  LossWeights weights;
  std::uint64_t seed = 1;

  KeyValueFile to_key_values() const;
  static CycleGanConfig from_key_values(const KeyValueFile& kv);
};

struct CycleGanResult {
  CycleGanModels<float> models;
  TrainingLog log;  // one record per step
  std::vector<CycleLosses> history;
  double validation_cycle = 0.0;  // mean cycle loss on the held-out pairs after training
};

CycleGanModels<float> make_cyclegan_models(const CycleGanConfig& config);
CycleGanResult train_cyclegan_toy(const CycleGanConfig& config);

}  // namespace pwe::train

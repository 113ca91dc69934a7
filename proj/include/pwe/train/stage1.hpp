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
#include "pwe/train/datasets.hpp"
#include "pwe/train/training_log.hpp"

namespace pwe::train {

/// Paired U-Net training: batch size 1, L1 loss, ADAM.
struct Stage1Config {
  std::size_t image_size = 64;
  std::vector<std::size_t> filters{8, 16, 32, 64};
  std::size_t pairs = 200;
  std::size_t epochs = 30;
  double learning_rate = 2e-4;
  double blur_sigma = 2.0;
  std::uint64_t seed = 1;

  nn::GeneratorConfig generator() const;
  KeyValueFile to_key_values() const;
  static Stage1Config from_key_values(const KeyValueFile& kv);
};

struct Stage1Result {
  nn::ModelGraph model;  // weights from the epoch with the lowest validation loss
  TrainingLog log;       // columns: epoch, lr, train_l1, val_l1 (epoch 0 = before training)
  std::size_t best_epoch = 0;
  double best_validation_loss = 0.0;
  double test_loss = 0.0;
};

double mean_l1(const nn::ModelGraph& model, const std::vector<PairedSample>& samples);

Stage1Result train_stage1(const Stage1Config& config, const DataSplit<PairedSample>& data);

/// Generates blur-to-sharp pairs, splits them 80/10/10 and trains.
Stage1Result train_stage1_toy(const Stage1Config& config);

}  // namespace pwe::train

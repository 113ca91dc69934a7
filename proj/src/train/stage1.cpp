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

#include "pwe/train/stage1.hpp"

#include <limits>
#include <random>
#include <stdexcept>

#include "pwe/train/adam.hpp"
#include "pwe/train/backward.hpp"
#include "pwe/train/losses.hpp"

namespace pwe::train {
namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

nn::GeneratorConfig Stage1Config::generator() const {
  nn::GeneratorConfig g;
  g.role = nn::ModelRole::stage1_unet;
  g.height = g.width = image_size;
  g.filters = filters;
  return g;
}

KeyValueFile Stage1Config::to_key_values() const {
  KeyValueFile kv;
  kv.set("image_size", std::to_string(image_size));
  kv.set("filters", join(filters));
  kv.set("pairs", std::to_string(pairs));
  kv.set("epochs", std::to_string(epochs));
  kv.set("learning_rate", std::to_string(learning_rate));
  kv.set("blur_sigma", std::to_string(blur_sigma));
  kv.set("seed", std::to_string(seed));
  kv.set("batch_size", "1");
  kv.set("loss", "l1");
  return kv;
}

Stage1Config Stage1Config::from_key_values(const KeyValueFile& kv) {
  Stage1Config c;
  c.image_size = static_cast<std::size_t>(kv.get_int("image_size", static_cast<long long>(c.image_size)));
  std::vector<long long> f(c.filters.begin(), c.filters.end());
  f = kv.get_int_list("filters", f);
  c.filters.assign(f.begin(), f.end());
  c.pairs = static_cast<std::size_t>(kv.get_int("pairs", static_cast<long long>(c.pairs)));
  c.epochs = static_cast<std::size_t>(kv.get_int("epochs", static_cast<long long>(c.epochs)));
  c.learning_rate = kv.get_double("learning_rate", c.learning_rate);
  c.blur_sigma = kv.get_double("blur_sigma", c.blur_sigma);
  c.seed = static_cast<std::uint64_t>(kv.get_int("seed", static_cast<long long>(c.seed)));
  return c;
}

double mean_l1(const nn::ModelGraph& model, const std::vector<PairedSample>& samples) {
  if (samples.empty()) throw std::invalid_argument("mean_l1: no samples");
  double s = 0.0;
  for (const auto& p : samples) s += l1_loss(model(p.input), p.target);
  return s / static_cast<double>(samples.size());
}

Stage1Result train_stage1(const Stage1Config& config, const DataSplit<PairedSample>& data) {
  if (data.train.empty() || data.validation.empty()) {
    throw std::invalid_argument("train_stage1: training and validation sets must be non-empty");
  }
  if (config.learning_rate < 0.0) throw std::invalid_argument("train_stage1: negative learning rate");
  const nn::GraphSpec graph = nn::build_generator(config.generator());
  nn::ModelGraph model{graph, nn::init_weights<float>(graph, config.seed)};
  AdamState<float> adam;
  std::mt19937_64 rng(config.seed ^ 0x5EED5EEDULL);

  Stage1Result r{model, TrainingLog("stage-1 U-Net training", {"epoch", "lr", "train_l1", "val_l1"}), 0,
                 0.0, 0.0};
  r.log.header() = config.to_key_values();
  r.best_validation_loss = mean_l1(model, data.validation);
  r.log.add_row({0.0, config.learning_rate, std::numeric_limits<double>::quiet_NaN(), r.best_validation_loss});

  std::vector<std::size_t> order(data.train.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    double train_loss = 0.0;
    for (std::size_t idx : order) {
      const PairedSample& s = data.train[idx];
      const auto outs = nn::forward_all(graph, model.weights, s.input);
      train_loss += l1_loss(outs.back(), s.target);
      const auto g = backward(graph, model.weights, s.input, outs, l1_grad(outs.back(), s.target));
      if (config.learning_rate > 0.0) adam_step(adam, model.weights, g.weights, config.learning_rate);
    }
    train_loss /= static_cast<double>(order.size());
    const double val = mean_l1(model, data.validation);
    r.log.add_row({static_cast<double>(epoch), config.learning_rate, train_loss, val});
    if (val < r.best_validation_loss) {
      r.best_validation_loss = val;
      r.best_epoch = epoch;
      r.model.weights = model.weights;
    }
  }
  r.log.header().set("best_epoch", std::to_string(r.best_epoch));
  r.test_loss = data.test.empty() ? 0.0 : mean_l1(r.model, data.test);
  return r;
}

Stage1Result train_stage1_toy(const Stage1Config& config) {
  if (config.pairs == 0) throw std::invalid_argument("train_stage1_toy: empty dataset");
  auto pairs = make_blur_sharp_pairs(config.pairs, config.image_size, config.seed, config.blur_sigma);
  return train_stage1(config, split_dataset(std::move(pairs), config.seed));
}

}  // namespace pwe::train

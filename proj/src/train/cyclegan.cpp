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

#include "pwe/train/cyclegan.hpp"

#include <random>
#include <stdexcept>

#include "pwe/train/backward.hpp"
#include "pwe/train/datasets.hpp"
#include "pwe/train/losses.hpp"

namespace pwe::train {
namespace {

template <class T>
std::vector<BasicTensor<T>> run(const nn::BasicModel<T>& m, const BasicTensor<T>& x) {
  return nn::forward_all(m.graph, m.weights, x);
}

template <class T>
const BasicTensor<T>& last(const std::vector<BasicTensor<T>>& outs, const BasicTensor<T>& x) {
  return outs.empty() ? x : outs.back();
}

template <class T>
void add(BasicTensor<T>& a, const BasicTensor<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

template <class N>
std::string join(const std::vector<N>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

void LossWeights::validate() const {
  if (!(lambda_G >= 0.0) || !(lambda_F >= 0.0) || !(identity_weight >= 0.0)) {
    throw std::invalid_argument("LossWeights: weights must be non-negative");
  }
}

template <class T>
CycleLosses cyclegan_losses(const CycleGanModels<T>& m, const BasicTensor<T>& x,
                            const BasicTensor<T>& y, const LossWeights& w) {
  w.validate();
  CycleLosses l;
  const BasicTensor<T> gx = m.G(x), fy = m.F(y);
  l.adv_G = w.lambda_G * mse_to_constant(m.DY(gx), 1.0);
  l.cyc_G = l1_loss(m.F(gx), x);
  l.id_G = w.identity_weight * l1_loss(m.G(y), y);
  l.gen_G = l.adv_G + l.cyc_G + l.id_G;
  l.adv_F = w.lambda_F * mse_to_constant(m.DX(fy), 1.0);
  l.cyc_F = l1_loss(m.G(fy), y);
  l.id_F = w.identity_weight * l1_loss(m.F(x), x);
  l.gen_F = l.adv_F + l.cyc_F + l.id_F;
  l.disc_Y = 0.5 * mse_to_constant(m.DY(y), 1.0) + 0.5 * mse_to_constant(m.DY(gx), 0.0);
  l.disc_X = 0.5 * mse_to_constant(m.DX(x), 1.0) + 0.5 * mse_to_constant(m.DX(fy), 0.0);
  return l;
}

template <class T>
GeneratorGradients<T> generator_gradients(const CycleGanModels<T>& m, const BasicTensor<T>& x,
                                          const BasicTensor<T>& y, const LossWeights& w,
                                          CycleLosses* losses) {
  w.validate();
  if (x.shape() != y.shape()) {
    throw std::invalid_argument("cyclegan: domain batches differ in shape " + nn::shape_string(x.shape()) +
                                " vs " + nn::shape_string(y.shape()));
  }
  // Forward passes.
  const auto g_x = run(m.G, x);
  const BasicTensor<T>& gx = last(g_x, x);
  const auto f_y = run(m.F, y);
  const BasicTensor<T>& fy = last(f_y, y);
  const auto f_gx = run(m.F, gx);
  const auto g_fy = run(m.G, fy);
  const auto g_y = run(m.G, y);
  const auto f_x = run(m.F, x);
  const auto dy_gx = run(m.DY, gx);
  const auto dx_fy = run(m.DX, fy);

  CycleLosses l;
  l.adv_G = w.lambda_G * mse_to_constant(last(dy_gx, gx), 1.0);
  l.cyc_G = l1_loss(last(f_gx, gx), x);
  l.id_G = w.identity_weight * l1_loss(last(g_y, y), y);
  l.gen_G = l.adv_G + l.cyc_G + l.id_G;
  l.adv_F = w.lambda_F * mse_to_constant(last(dx_fy, fy), 1.0);
  l.cyc_F = l1_loss(last(g_fy, fy), y);
  l.id_F = w.identity_weight * l1_loss(last(f_x, x), x);
  l.gen_F = l.adv_F + l.cyc_F + l.id_F;

  GeneratorGradients<T> grads;
  // Path x -> G -> gx: adversarial term through D_Y and cycle term through F.
  BasicTensor<T> d_gx =
      backward(m.DY.graph, m.DY.weights, gx, dy_gx,
               mse_to_constant_grad(last(dy_gx, gx), 1.0, w.lambda_G)).input;
  {
    auto g = backward(m.F.graph, m.F.weights, gx, f_gx, l1_grad(last(f_gx, gx), x));
    accumulate(grads.F, g.weights);
    add(d_gx, g.input);
  }
  accumulate(grads.G, backward(m.G.graph, m.G.weights, x, g_x, d_gx).weights);
  if (w.identity_weight > 0.0) {
    accumulate(grads.G, backward(m.G.graph, m.G.weights, y, g_y,
                                 l1_grad(last(g_y, y), y, w.identity_weight)).weights);
  }
  // Path y -> F -> fy.
  BasicTensor<T> d_fy =
      backward(m.DX.graph, m.DX.weights, fy, dx_fy,
               mse_to_constant_grad(last(dx_fy, fy), 1.0, w.lambda_F)).input;
  {
    auto g = backward(m.G.graph, m.G.weights, fy, g_fy, l1_grad(last(g_fy, fy), y));
    accumulate(grads.G, g.weights);
    add(d_fy, g.input);
  }
  accumulate(grads.F, backward(m.F.graph, m.F.weights, y, f_y, d_fy).weights);
  if (w.identity_weight > 0.0) {
    accumulate(grads.F, backward(m.F.graph, m.F.weights, x, f_x,
                                 l1_grad(last(f_x, x), x, w.identity_weight)).weights);
  }
  if (losses != nullptr) {
    const double dx = losses->disc_X, dyv = losses->disc_Y;
    *losses = l;
    losses->disc_X = dx;
    losses->disc_Y = dyv;
  }
  return grads;
}

template <class T>
nn::WeightStore<T> discriminator_gradients(const nn::BasicModel<T>& d, const BasicTensor<T>& real,
                                           const BasicTensor<T>& fake, double* loss) {
  const auto r = run(d, real);
  const auto f = run(d, fake);
  const BasicTensor<T>& dr = last(r, real);
  const BasicTensor<T>& df = last(f, fake);
  if (loss != nullptr) *loss = 0.5 * mse_to_constant(dr, 1.0) + 0.5 * mse_to_constant(df, 0.0);
  nn::WeightStore<T> g = backward(d.graph, d.weights, real, r, mse_to_constant_grad(dr, 1.0, 0.5)).weights;
  accumulate(g, backward(d.graph, d.weights, fake, f, mse_to_constant_grad(df, 0.0, 0.5)).weights);
  return g;
}

template <class T>
CycleLosses cyclegan_step(CycleGanModels<T>& m, CycleGanOptimizers<T>& opt, const BasicTensor<T>& x,
                          const BasicTensor<T>& y, const LossWeights& w, double lr) {
  CycleLosses l;
  const BasicTensor<T> fy = m.F(y), gx = m.G(x);
  const auto gdx = discriminator_gradients(m.DX, x, fy, &l.disc_X);
  adam_step(opt.DX, m.DX.weights, gdx, lr);
  const auto gdy = discriminator_gradients(m.DY, y, gx, &l.disc_Y);
  adam_step(opt.DY, m.DY.weights, gdy, lr);
  const auto gg = generator_gradients(m, x, y, w, &l);
  adam_step(opt.G, m.G.weights, gg.G, lr);
  adam_step(opt.F, m.F.weights, gg.F, lr);
  return l;
}

KeyValueFile CycleGanConfig::to_key_values() const {
  KeyValueFile kv;
  kv.set("image_size", std::to_string(image_size));
  kv.set("source_size", std::to_string(source_size));
  kv.set("generator_filters", join(generator_filters));
  kv.set("discriminator_filters", join(discriminator_filters));
  kv.set("samples", std::to_string(samples));
  kv.set("steps", std::to_string(steps));
  kv.set("lr_boundaries", join(schedule.boundaries));
  kv.set("lr_rates", join(schedule.rates));
  kv.set("lambda_G", std::to_string(weights.lambda_G));
  kv.set("lambda_F", std::to_string(weights.lambda_F));
  kv.set("identity_weight", std::to_string(weights.identity_weight));
  kv.set("seed", std::to_string(seed));
  kv.set("update_order", "D_X,D_Y,G+F");
  kv.set("discriminator_targets", "real=1,fake=0");
  return kv;
}

CycleGanConfig CycleGanConfig::from_key_values(const KeyValueFile& kv) {
  CycleGanConfig c;
  auto sizes = [&](const char* key, std::vector<std::size_t>& out) {
    std::vector<long long> v(out.begin(), out.end());
    v = kv.get_int_list(key, v);
    out.assign(v.begin(), v.end());
  };
  c.image_size = static_cast<std::size_t>(kv.get_int("image_size", static_cast<long long>(c.image_size)));
  c.source_size = static_cast<std::size_t>(kv.get_int("source_size", static_cast<long long>(c.image_size + 8)));
  sizes("generator_filters", c.generator_filters);
  sizes("discriminator_filters", c.discriminator_filters);
  c.samples = static_cast<std::size_t>(kv.get_int("samples", static_cast<long long>(c.samples)));
  c.steps = static_cast<std::size_t>(kv.get_int("steps", static_cast<long long>(c.steps)));
  sizes("lr_boundaries", c.schedule.boundaries);
  if (auto rates = kv.find("lr_rates")) {
    c.schedule.rates.clear();
    std::size_t pos = 0;
    while (pos <= rates->size()) {
      const std::size_t comma = rates->find(',', pos);
      const std::string item = rates->substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        c.schedule.rates.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw std::invalid_argument("lr_rates: '" + item + "' is not a number");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  c.schedule.validate();
  c.weights.lambda_G = kv.get_double("lambda_G", c.weights.lambda_G);
  c.weights.lambda_F = kv.get_double("lambda_F", c.weights.lambda_F);
  c.weights.identity_weight = kv.get_double("identity_weight", c.weights.identity_weight);
  c.weights.validate();
  c.seed = static_cast<std::uint64_t>(kv.get_int("seed", static_cast<long long>(c.seed)));
  return c;
}

CycleGanModels<float> make_cyclegan_models(const CycleGanConfig& c) {
  nn::GeneratorConfig gc;
  gc.height = gc.width = c.image_size;
  gc.filters = c.generator_filters;
  gc.role = nn::ModelRole::generator_G;
  const nn::GraphSpec g = nn::build_generator(gc);
  gc.role = nn::ModelRole::generator_F;
  const nn::GraphSpec f = nn::build_generator(gc);
  auto dc = nn::discriminator_config_for(nn::ModelRole::discriminator_X);
  dc.height = dc.width = c.image_size;
  dc.filters = c.discriminator_filters;
  const nn::GraphSpec dx = nn::build_discriminator(dc);
  auto dyc = nn::discriminator_config_for(nn::ModelRole::discriminator_Y);
  dyc.height = dyc.width = c.image_size;
  dyc.filters = c.discriminator_filters;
  const nn::GraphSpec dy = nn::build_discriminator(dyc);
  return {{g, nn::init_weights<float>(g, c.seed * 4 + 0)},
          {f, nn::init_weights<float>(f, c.seed * 4 + 1)},
          {dx, nn::init_weights<float>(dx, c.seed * 4 + 2)},
          {dy, nn::init_weights<float>(dy, c.seed * 4 + 3)}};
}

CycleGanResult train_cyclegan_toy(const CycleGanConfig& c) {
  c.schedule.validate();
  c.weights.validate();
  if (c.samples == 0) throw std::invalid_argument("train_cyclegan_toy: empty domain");
  if (c.source_size < c.image_size) {
    throw std::invalid_argument("train_cyclegan_toy: source_size must be at least image_size");
  }
  UnpairedDomains domains = make_unpaired_domains(c.samples, c.source_size, c.seed);
  const DataSplit<nn::Tensor> xs = split_dataset(std::move(domains.x), c.seed + 1);
  const DataSplit<nn::Tensor> ys = split_dataset(std::move(domains.y), c.seed + 2);
  if (xs.train.empty() || ys.train.empty()) throw std::invalid_argument("train_cyclegan_toy: empty domain");

  CycleGanResult r{make_cyclegan_models(c),
                   TrainingLog("CycleGAN training",
                               {"step", "lr", "adv_G", "cyc_G", "id_G", "gen_G", "adv_F", "cyc_F",
                                "id_F", "gen_F", "disc_X", "disc_Y"}),
                   {},
                   0.0};
  r.log.header() = c.to_key_values();
  CycleGanOptimizers<float> opt;
  std::mt19937_64 rng(c.seed ^ 0xC1C1EULL);
  for (std::size_t step = 0; step < c.steps; ++step) {
    const nn::Tensor x = augment(xs.train[rng() % xs.train.size()], c.image_size, rng);
    const nn::Tensor y = augment(ys.train[rng() % ys.train.size()], c.image_size, rng);
    const double lr = c.schedule.rate_at(step);
    const CycleLosses l = cyclegan_step(r.models, opt, x, y, c.weights, lr);
    r.history.push_back(l);
    r.log.add_row({static_cast<double>(step), lr, l.adv_G, l.cyc_G, l.id_G, l.gen_G, l.adv_F, l.cyc_F,
                   l.id_F, l.gen_F, l.disc_X, l.disc_Y});
  }
  // Held-out cycle loss on centre crops.
  const std::size_t n = std::min(xs.validation.size(), ys.validation.size());
  if (n > 0) {
    const std::size_t off = (c.source_size - c.image_size) / 2;
    auto centre = [&](const nn::Tensor& t) {
      nn::Tensor out({1, c.image_size, c.image_size, 1});
      for (std::size_t yy = 0; yy < c.image_size; ++yy)
        for (std::size_t xx = 0; xx < c.image_size; ++xx) out.at(0, yy, xx, 0) = t.at(0, yy + off, xx + off, 0);
      return out;
    };
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      s += cyclegan_losses(r.models, centre(xs.validation[i]), centre(ys.validation[i]), c.weights).cycle();
    }
    r.validation_cycle = s / static_cast<double>(n);
    r.log.header().set("validation_cycle", std::to_string(r.validation_cycle));
  }
  return r;
}

#define PWE_INSTANTIATE_CYCLEGAN(T)                                                              \
  template CycleLosses cyclegan_losses(const CycleGanModels<T>&, const BasicTensor<T>&,         \
                                       const BasicTensor<T>&, const LossWeights&);              \
  template GeneratorGradients<T> generator_gradients(const CycleGanModels<T>&,                  \
                                                     const BasicTensor<T>&,                     \
                                                     const BasicTensor<T>&, const LossWeights&, \
                                                     CycleLosses*);                             \
  template nn::WeightStore<T> discriminator_gradients(const nn::BasicModel<T>&,                 \
                                                      const BasicTensor<T>&,                    \
                                                      const BasicTensor<T>&, double*);          \
  template CycleLosses cyclegan_step(CycleGanModels<T>&, CycleGanOptimizers<T>&,                \
                                     const BasicTensor<T>&, const BasicTensor<T>&,              \
                                     const LossWeights&, double);

PWE_INSTANTIATE_CYCLEGAN(float)
PWE_INSTANTIATE_CYCLEGAN(double)

}  // namespace pwe::train

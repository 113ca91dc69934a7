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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "pwe/common/error.hpp"
#include "pwe/nn/builders.hpp"
#include "pwe/nn/graph.hpp"
#include "pwe/nn/ops.hpp"
#include "pwe/nn/spectral_norm.hpp"
#include "pwe/nn/weights_io.hpp"
#include "support/nn_oracles.hpp"

namespace pwe::nn {
namespace {

using testing::random_tensor;
using testing::relative_error;

const TensorD kNoBias;

TEST(Tensor, ShapeAndAccess) {
  TensorD t({2, 3, 4, 5}, 1.5);
  EXPECT_EQ(t.size(), 120u);
  t.at(1, 2, 3, 4) = 7.0;
  EXPECT_EQ(t[119], 7.0);
  EXPECT_THROW(TensorD({2, 2}, std::vector<double>(3)), std::invalid_argument);
  EXPECT_EQ(shape_string({1, 16, 16, 1}), "(1, 16, 16, 1)");
}

TEST(Conv2d, OneByOneIdentityKernel) {
  const TensorD x = random_tensor({1, 3, 3, 1}, 1);
  const TensorD w({1, 1, 1, 1}, 1.0);
  EXPECT_EQ(conv2d(x, w, kNoBias, 1, Padding::same), x);
}

TEST(Conv2d, OnesValidCountsNine) {
  const TensorD y = conv2d(TensorD({1, 4, 4, 1}, 1.0), TensorD({3, 3, 1, 1}, 1.0), kNoBias, 1,
                           Padding::valid);
  ASSERT_EQ(y.shape(), (Shape{1, 2, 2, 1}));
  for (double v : y.values()) EXPECT_EQ(v, 9.0);
}

TEST(Conv2d, MatchesDirectSummation) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const TensorD x = random_tensor({1, 8, 8, 2}, seed);
    const TensorD b = random_tensor({3}, seed + 100);
    for (std::size_t k : {1u, 3u, 4u}) {
      const TensorD w = random_tensor({k, k, 2, 3}, seed + 200 + k);
      for (std::size_t s : {1u, 2u}) {
        const std::size_t out = (8 + s - 1) / s;
        const std::size_t total = std::max<long>(0, static_cast<long>((out - 1) * s + k) - 8);
        EXPECT_LE(relative_error(conv2d(x, w, b, s, Padding::same),
                                 testing::direct_conv2d(x, w, b, s, total / 2, total / 2, out, out)),
                  1e-10);
        const std::size_t vout = (8 - k) / s + 1;
        EXPECT_LE(relative_error(conv2d(x, w, b, s, Padding::valid),
                                 testing::direct_conv2d(x, w, b, s, 0, 0, vout, vout)),
                  1e-10);
      }
    }
  }
}

TEST(Conv2d, SameOutputIsCeilOfStride) {
  const TensorD y = conv2d(random_tensor({2, 7, 5, 1}, 3), random_tensor({3, 3, 1, 4}, 4), kNoBias,
                           2, Padding::same);
  EXPECT_EQ(y.shape(), (Shape{2, 4, 3, 4}));
}

TEST(Conv2d, ShapeMismatchNamesDimensions) {
  try {
    conv2d(TensorD({1, 4, 4, 3}), TensorD({3, 3, 2, 1}), kNoBias, 1, Padding::same);
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("3 channels"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("(3, 3, 2, 1)"), std::string::npos) << e.what();
  }
}

TEST(ConvTranspose, UnitKernelPlacesValueAtOrigin) {
  const TensorD x({1, 1, 1, 1}, 3.0);
  const TensorD w({1, 1, 1, 1}, 0.5);
  for (auto sem : {TransposeSemantics::crop_output, TransposeSemantics::pad_input}) {
    const TensorD y = conv2d_transpose(x, w, kNoBias, 2, sem);
    ASSERT_EQ(y.shape(), (Shape{1, 2, 2, 1}));
    EXPECT_EQ(y[0], 1.5);
    EXPECT_EQ(y[1], 0.0);
    EXPECT_EQ(y[2], 0.0);
    EXPECT_EQ(y[3], 0.0);
  }
}

TEST(ConvTranspose, StrideOneUnitKernelEqualsConv) {
  const TensorD x = random_tensor({1, 5, 5, 3}, 9);
  const TensorD w = random_tensor({1, 1, 3, 4}, 10);
  const TensorD b = random_tensor({4}, 11);
  const TensorD ref = conv2d(x, w, b, 1, Padding::same);
  EXPECT_LE(relative_error(conv2d_transpose(x, w, b, 1, TransposeSemantics::pad_input), ref), 1e-14);
  EXPECT_LE(relative_error(
                conv2d_transpose(x, convert_transpose_kernel(w), b, 1, TransposeSemantics::crop_output),
                ref),
            1e-14);
}

TEST(ConvTranspose, BothSemanticsMatchScatterOracle) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const TensorD x = random_tensor({1, 4, 4, 3}, seed);
    const TensorD b = random_tensor({2}, seed + 50);
    for (std::size_t k : {1u, 2u, 3u, 4u, 5u}) {
      const TensorD w = random_tensor({k, k, 2, 3}, seed + 100 * k);  // (kh, kw, out, in)
      const std::size_t crop = transpose_crop(k, 2);
      const TensorD oracle = testing::scatter_transpose(x, w, b, 2, crop, crop);
      const TensorD crop_out = conv2d_transpose(x, w, b, 2, TransposeSemantics::crop_output);
      const TensorD pad_in =
          conv2d_transpose(x, convert_transpose_kernel(w), b, 2, TransposeSemantics::pad_input);
      ASSERT_EQ(crop_out.shape(), (Shape{1, 8, 8, 2}));
      EXPECT_LE(relative_error(crop_out, oracle), 1e-10) << "k=" << k;
      EXPECT_LE(relative_error(pad_in, oracle), 1e-10) << "k=" << k;
      EXPECT_LE(relative_error(pad_in, crop_out), 1e-10) << "k=" << k;
    }
  }
}

TEST(ConvTranspose, CropOffsets) {
  EXPECT_EQ(transpose_crop(4, 2), 1u);
  EXPECT_EQ(transpose_crop(3, 2), 0u);
  EXPECT_EQ(transpose_crop(5, 2), 1u);
  EXPECT_EQ(transpose_crop(1, 2), 0u);
}

TEST(ConvTranspose, KernelConversionIsInvolution) {
  const TensorD w = random_tensor({3, 4, 5, 2}, 77);
  const TensorD c = convert_transpose_kernel(w);
  EXPECT_EQ(c.shape(), (Shape{3, 4, 2, 5}));
  EXPECT_EQ(convert_transpose_kernel(c), w);
  // Spot-check the flip: tap (0, 0) of the converted kernel is tap (2, 3) of the source.
  EXPECT_EQ(c[0 * 5 + 0], w[((2 * 4 + 3) * 5 + 0) * 2 + 0]);
  EXPECT_EQ(c[1 * 5 + 3], w[((2 * 4 + 3) * 5 + 3) * 2 + 1]);
}

TEST(ConvTranspose, RejectsBadInputs) {
  const TensorD x({1, 2, 2, 3});
  EXPECT_THROW(conv2d_transpose(x, TensorD({3, 3, 2, 4}), kNoBias, 2, TransposeSemantics::crop_output),
               std::invalid_argument);
  EXPECT_THROW(conv2d_transpose(x, TensorD({3, 3, 3, 4}), kNoBias, 0, TransposeSemantics::pad_input),
               std::invalid_argument);
  EXPECT_THROW(conv2d_transpose(x, TensorD({3, 3, 3, 4}), kNoBias, 2,
                                static_cast<TransposeSemantics>(7)),
               std::invalid_argument);
}

TEST(Activations, PointValues) {
  const TensorD x({1, 1, 1, 3}, std::vector<double>{-1.0, 0.0, 2.5});
  const TensorD l = leaky_relu(x, 0.2);
  EXPECT_DOUBLE_EQ(l[0], -0.2);
  EXPECT_EQ(l[1], 0.0);
  EXPECT_EQ(l[2], 2.5);
  EXPECT_EQ(nn::tanh(x)[1], 0.0);
  EXPECT_EQ(sigmoid(x)[1], 0.5);
}

TEST(Norms, BatchNormIdentity) {
  const TensorD x = random_tensor({2, 3, 3, 4}, 5);
  const TensorD y = batch_norm_inference(x, TensorD({4}, 0.0), TensorD({4}, 1.0), TensorD({4}, 1.0),
                                         TensorD({4}, 0.0), 1e-12);
  EXPECT_LE(relative_error(y, x), 1e-7);
  EXPECT_THROW(batch_norm_inference(x, TensorD({4}), TensorD({4}), TensorD({4}), TensorD({4}), 0.0),
               std::invalid_argument);
}

TEST(Norms, InstanceNormStandardizesEachPlane) {
  const TensorD x = random_tensor({2, 6, 5, 3}, 6, 4.0);
  const TensorD y = instance_norm(x, TensorD({3}, 1.0), TensorD({3}, 0.0), 1e-12);
  for (std::size_t n = 0; n < 2; ++n) {
    for (std::size_t c = 0; c < 3; ++c) {
      double m = 0.0, v = 0.0;
      for (std::size_t i = 0; i < 30; ++i) m += y.at(n, i / 5, i % 5, c);
      m /= 30.0;
      for (std::size_t i = 0; i < 30; ++i) v += std::pow(y.at(n, i / 5, i % 5, c) - m, 2);
      EXPECT_NEAR(m, 0.0, 1e-6);
      EXPECT_NEAR(v / 30.0, 1.0, 1e-6);
    }
  }
}

TEST(Norms, InstanceNormConstantChannelGivesBeta) {
  const TensorD x({1, 4, 4, 2}, 3.0);
  const TensorD y = instance_norm(x, TensorD({2}, std::vector<double>{2.0, 5.0}),
                                  TensorD({2}, std::vector<double>{0.25, -1.0}), 1e-5);
  // (c - mean) = 0 exactly, so gamma * 0 / sqrt(eps) + beta = beta.
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_EQ(y[2 * i], 0.25);
    EXPECT_EQ(y[2 * i + 1], -1.0);
  }
  EXPECT_THROW(instance_norm(x, TensorD({2}, 1.0), TensorD({2}), -1.0), std::invalid_argument);
  EXPECT_THROW(instance_norm(x, TensorD({3}, 1.0), TensorD({3}), 1e-5), std::invalid_argument);
}

TEST(Concat, AppendsChannels) {
  const TensorD a = random_tensor({1, 2, 2, 2}, 1), b = random_tensor({1, 2, 2, 1}, 2);
  const TensorD c = concat_channels(a, b);
  ASSERT_EQ(c.shape(), (Shape{1, 2, 2, 3}));
  EXPECT_EQ(c.at(0, 1, 1, 1), a.at(0, 1, 1, 1));
  EXPECT_EQ(c.at(0, 1, 0, 2), b.at(0, 1, 0, 0));
  EXPECT_THROW(concat_channels(a, TensorD({1, 3, 2, 1})), std::invalid_argument);
}

TEST(SpectralNorm, DiagonalMatrix) {
  const TensorD w({2, 2}, std::vector<double>{3.0, 0.0, 0.0, 1.0});
  EXPECT_NEAR(estimate_spectral_norm(w, 50).sigma, 3.0, 1e-6);
}

TEST(SpectralNorm, OrthogonalMatrix) {
  const double a = 0.7;
  const TensorD w({2, 2}, std::vector<double>{std::cos(a), -std::sin(a), std::sin(a), std::cos(a)});
  EXPECT_NEAR(estimate_spectral_norm(w, 10).sigma, 1.0, 1e-6);
}

TEST(SpectralNorm, MatchesJacobiSvd) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const TensorD w = random_tensor({12, 8}, seed);  // 8 x 12 matrix, M[o][r] = w[r * 8 + o]
    std::vector<double> m(8 * 12);
    for (std::size_t o = 0; o < 8; ++o)
      for (std::size_t r = 0; r < 12; ++r) m[o * 12 + r] = w[r * 8 + o];
    const double oracle = testing::jacobi_singular_values(m, 8, 12).front();
    EXPECT_NEAR(estimate_spectral_norm(w, 100).sigma, oracle, 1e-4 * oracle);
  }
}

TEST(SpectralNorm, NormalizedKernelHasUnitNorm) {
  const TensorD w = random_tensor({4, 4, 3, 6}, 8);
  const auto r = spectral_normalize(w, 100);
  EXPECT_NEAR(estimate_spectral_norm(r.normalized, 100).sigma, 1.0, 1e-4);
}

TEST(SpectralNorm, RejectsDegenerateInput) {
  EXPECT_THROW(spectral_normalize(TensorD({3, 3, 2, 2}), 10), std::invalid_argument);
  EXPECT_THROW(spectral_normalize(random_tensor({2, 2}, 1), 0), std::invalid_argument);
}

GeneratorConfig small_generator(std::size_t size = 32) {
  GeneratorConfig c;
  c.height = c.width = size;
  c.filters = {4, 8, 8};
  return c;
}

TEST(Builders, GeneratorPreservesShape) {
  const GraphSpec g = build_generator(GeneratorConfig{});
  EXPECT_EQ(g.output_shape({1, 512, 512, 1}), (Shape{1, 512, 512, 1}));
  const auto w = init_weights<float>(g, 1);
  const Tensor y = forward(g, w, Tensor({1, 512, 512, 1}, 0.5f));
  EXPECT_EQ(y.shape(), (Shape{1, 512, 512, 1}));
  for (float v : y.values()) ASSERT_TRUE(v > 0.0f && v < 1.0f);
}

TEST(Builders, DiscriminatorYieldsSixteenBySixteenPatch) {
  for (ModelRole role : {ModelRole::discriminator_X, ModelRole::discriminator_Y}) {
    const GraphSpec d = build_discriminator(discriminator_config_for(role));
    EXPECT_EQ(d.output_shape({1, 512, 512, 1}), (Shape{1, 16, 16, 1}));
  }
  auto cfg = discriminator_config_for(ModelRole::discriminator_X);
  cfg.power_iterations = 3;
  const GraphSpec d = build_discriminator(cfg);
  const Tensor y = forward(d, init_weights<float>(d, 2), Tensor({1, 512, 512, 1}, 0.25f));
  EXPECT_EQ(y.shape(), (Shape{1, 16, 16, 1}));
}

TEST(Builders, NormPlacementByRole) {
  const GraphSpec dx = build_discriminator(discriminator_config_for(ModelRole::discriminator_X));
  const GraphSpec dy = build_discriminator(discriminator_config_for(ModelRole::discriminator_Y));
  for (const auto& l : dx.layers) {
    EXPECT_NE(l.kind, LayerKind::instance_norm);
    if (l.has_kernel()) {
      EXPECT_TRUE(l.spectral_norm) << l.name;
    }
  }
  std::size_t norms = 0;
  for (const auto& l : dy.layers) {
    norms += l.kind == LayerKind::instance_norm;
    EXPECT_FALSE(l.spectral_norm);
  }
  EXPECT_EQ(norms, 4u);
  const GraphSpec g = build_generator(GeneratorConfig{});
  for (const auto& l : g.layers) EXPECT_FALSE(l.spectral_norm);
  EXPECT_EQ(g.layers[1].kind, LayerKind::leaky_relu);  // no norm after the first conv
}

TEST(Builders, ZeroWeightGeneratorIsConstant) {
  const GraphSpec g = build_generator(small_generator());
  const auto w = zero_weights<double>(g);
  for (std::uint64_t seed : {1u, 2u}) {
    const TensorD y = forward(g, w, random_tensor({1, 32, 32, 1}, seed));
    for (double v : y.values()) ASSERT_EQ(v, 0.5);
  }
}

TEST(Builders, IndivisibleResolutionRejected) {
  GeneratorConfig c;
  c.height = 500;
  EXPECT_THROW(build_generator(c), std::invalid_argument);
  DiscriminatorConfig d;
  d.width = 100;
  EXPECT_THROW(build_discriminator(d), std::invalid_argument);
}

TEST(Builders, InitIsSeeded) {
  const GraphSpec g = build_generator(small_generator());
  EXPECT_EQ(init_weights<float>(g, 5), init_weights<float>(g, 5));
  EXPECT_NE(init_weights<float>(g, 5), init_weights<float>(g, 6));
  const auto w = init_weights<double>(g, 5);
  double s = 0.0, s2 = 0.0;
  std::size_t n = 0;
  for (const auto& [name, t] : w) {
    if (name.ends_with("/kernel")) {
      for (double v : t.values()) s += v, s2 += v * v, ++n;
    } else if (name.ends_with("/bias")) {
      for (double v : t.values()) EXPECT_EQ(v, 0.0);
    }
  }
  EXPECT_NEAR(std::sqrt(s2 / n - (s / n) * (s / n)), 0.02, 0.002);
}

TEST(Graph, ForwardIsDeterministicAndMatchesForwardAll) {
  const GraphSpec g = build_generator(small_generator());
  const auto w = init_weights<float>(g, 3);
  const Tensor x = random_tensor({1, 32, 32, 1}, 4).cast<float>();
  const Tensor a = forward(g, w, x), b = forward(g, w, x);
  EXPECT_EQ(a, b);
  EXPECT_EQ(forward_all(g, w, x).back(), a);
}

TEST(Graph, ConcurrentForwardsShareWeights) {
  const GraphSpec g = build_generator(small_generator());
  const auto w = init_weights<float>(g, 3);
  const Tensor x = random_tensor({1, 32, 32, 1}, 4).cast<float>();
  const Tensor ref = forward(g, w, x);
  Tensor r1, r2;
  std::thread t1([&] { r1 = forward(g, w, x); });
  std::thread t2([&] { r2 = forward(g, w, x); });
  t1.join();
  t2.join();
  EXPECT_EQ(r1, ref);
  EXPECT_EQ(r2, ref);
}

TEST(Graph, TwoStagesCompose) {
  const GraphSpec g = build_generator(small_generator());
  const auto w1 = init_weights<float>(g, 1), w2 = init_weights<float>(g, 2);
  const Tensor y = forward(g, w2, forward(g, w1, Tensor({1, 32, 32, 1}, 0.3f)));
  EXPECT_EQ(y.shape(), (Shape{1, 32, 32, 1}));
}

TEST(Graph, IdentityGraphReturnsInput) {
  const GraphSpec g = identity_graph(ModelRole::generator_G);
  const TensorD x = random_tensor({1, 8, 8, 1}, 1);
  EXPECT_EQ(forward(g, WeightStore<double>{}, x), x);
}

TEST(Graph, ShapeErrorsNameTheLayer) {
  const GraphSpec g = build_generator(small_generator());
  try {
    g.output_shapes({1, 36, 36, 1});
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("_skip"), std::string::npos) << e.what();
  }
  EXPECT_THROW(g.output_shapes({1, 32, 32, 2}), std::invalid_argument);
}

TEST(Graph, ValidateRejectsMalformedGraphs) {
  GraphSpec g = build_generator(small_generator());
  g.layers[3].name = g.layers[0].name;
  EXPECT_THROW(g.validate(), std::invalid_argument);
  g = build_generator(small_generator());
  for (auto& l : g.layers) {
    if (l.kind == LayerKind::concat_skip) l.skip = "nowhere";
  }
  EXPECT_THROW(g.validate(), std::invalid_argument);
}

TEST(Graph, CheckWeightsReportsProblems) {
  const GraphSpec g = build_generator(small_generator());
  auto w = init_weights<float>(g, 1);
  EXPECT_TRUE(check_weights(g, w).empty());
  w.emplace("extra/kernel", Tensor({1}));
  EXPECT_EQ(check_weights(g, w), std::vector<std::string>{"extra/kernel"});
  w.erase("enc2_conv/kernel");
  w["dec0_conv/bias"] = Tensor({7});
  try {
    check_weights(g, w);
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("missing tensor 'enc2_conv/kernel'"), std::string::npos) << msg;
    EXPECT_NE(msg.find("'dec0_conv/bias' has shape (7)"), std::string::npos) << msg;
  }
}

TEST(WeightsIo, RoundTripIsBitExact) {
  const GraphSpec g = build_generator(small_generator());
  const auto w = init_weights<float>(g, 9);
  const auto path = std::filesystem::temp_directory_path() / "pwe_nn_test.pwnn";
  save_weights(w, path);
  EXPECT_EQ(load_weights(path), w);
  const BoundWeights b = load_weights_for(g, path);
  EXPECT_EQ(b.weights, w);
  EXPECT_TRUE(b.unused.empty());
  std::filesystem::remove(path);
}

TEST(WeightsIo, LayoutIsDocumented) {
  NamedTensors t;
  t.emplace_back("ab", Tensor({2, 1}, std::vector<float>{1.0f, -2.0f}));
  std::stringstream ss;
  write_tensor_file(ss, kWeightsMagic, t);
  const std::string s = ss.str();
  ASSERT_EQ(s.size(), 4u + 4u + 4u + 2u + 2u + 1u + 8u + 8u);
  EXPECT_EQ(s.substr(0, 4), "PWNN");
  EXPECT_EQ(s[12], 2);
  EXPECT_EQ(s.substr(14, 2), "ab");
  EXPECT_EQ(s[16], 2);
}

TEST(WeightsIo, MissingTensorNamedInError) {
  const GraphSpec g = build_generator(small_generator());
  auto w = init_weights<float>(g, 9);
  w.erase("out_conv/bias");
  w.emplace("legacy/kernel", Tensor({2}));
  const auto path = std::filesystem::temp_directory_path() / "pwe_nn_missing.pwnn";
  save_weights(w, path);
  try {
    load_weights_for(g, path);
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("out_conv/bias"), std::string::npos) << e.what();
  }
  w.emplace("out_conv/bias", Tensor({1}));
  save_weights(w, path);
  EXPECT_EQ(load_weights_for(g, path).unused, std::vector<std::string>{"legacy/kernel"});
  std::filesystem::remove(path);
}

TEST(WeightsIo, CorruptFilesRejected) {
  NamedTensors t;
  t.emplace_back("w", Tensor({3}, 1.0f));
  std::stringstream ss;
  write_tensor_file(ss, kWeightsMagic, t);
  const std::string s = ss.str();
  std::stringstream truncated(s.substr(0, s.size() - 2));
  EXPECT_THROW(read_tensor_file(truncated, kWeightsMagic), FormatError);
  std::stringstream wrong_magic(s);
  EXPECT_THROW(read_tensor_file(wrong_magic, kActivationsMagic), FormatError);
  std::stringstream trailing(s + "x");
  EXPECT_THROW(read_tensor_file(trailing, kWeightsMagic), FormatError);
}

TEST(ReferenceActivations, RoundTripMatchesCapture) {
  const GraphSpec g = build_generator(small_generator());
  const ModelGraph m{g, init_weights<float>(g, 4)};
  const Tensor x = random_tensor({1, 32, 32, 1}, 5).cast<float>();
  const ReferenceActivations ref = capture_activations(m, x);
  ASSERT_EQ(ref.layers.size(), g.layers.size());
  EXPECT_EQ(ref.layers.back().second, m(x));
  const auto path = std::filesystem::temp_directory_path() / "pwe_nn_test.pwra";
  save_reference_activations(ref, path);
  const ReferenceActivations back = load_reference_activations(path);
  EXPECT_EQ(back.input, x);
  EXPECT_EQ(back.layers, ref.layers);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace pwe::nn

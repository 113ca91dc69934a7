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

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <sstream>

#include "pwe/acq/phantoms.hpp"
#include "pwe/imgproc/bmode.hpp"
#include "pwe/imgproc/ground_truth.hpp"
#include "pwe/imgproc/histogram.hpp"
#include "pwe/imgproc/image_io.hpp"
#include "pwe/imgproc/resize.hpp"
#include "pwe/imgproc/unsharp.hpp"
#include "pwe/common/error.hpp"
#include "support/random.hpp"

namespace pwe::img {
namespace {

bf::PixelGrid grid_of(std::size_t w, std::size_t h) {
  bf::PixelGrid g;
  g.width = w;
  g.height = h;
  return g;
}

BModeImage random_bmode(std::size_t w, std::size_t h, std::uint64_t seed) {
  return BModeImage(Image(w, h, testing::uniform_values(w * h, seed)), grid_of(w, h),
                    StageTag::compounded);
}

TEST(Envelope, MagnitudeOfBeamsum) {
  bf::ComplexImage c(grid_of(2, 2));
  c.values = {{3.0, 4.0}, {0.0, 0.0}, {-1.0, 0.0}, {0.0, -2.0}};
  const Image e = envelope(c);
  EXPECT_DOUBLE_EQ(e.at(0, 0), 5.0);
  EXPECT_EQ(e.at(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(e.at(1, 0), 1.0);
  EXPECT_DOUBLE_EQ(e.at(1, 1), 2.0);
}

TEST(Envelope, InvariantUnderGlobalPhase) {
  bf::ComplexImage c(grid_of(8, 6));
  const auto re = testing::normal_values(48, 1), im = testing::normal_values(48, 2);
  for (std::size_t i = 0; i < 48; ++i) c.values[i] = {re[i], im[i]};
  bf::ComplexImage rotated = c;
  const auto phase = std::polar(1.0, 0.73);
  for (auto& v : rotated.values) v *= phase;
  const Image a = envelope(c), b = envelope(rotated);
  for (std::size_t i = 0; i < 48; ++i) EXPECT_NEAR(a.data()[i], b.data()[i], 1e-12);
}

TEST(LogCompress, DecibelMapping) {
  const Image out = log_compress(Image(2, 1, {1.0, 0.1}), 60.0);
  EXPECT_DOUBLE_EQ(out.data()[0], 1.0);
  EXPECT_NEAR(out.data()[1], 1.0 - 20.0 / 60.0, 1e-12);
}

TEST(LogCompress, ConstantAndFloor) {
  const Image flat = log_compress(Image(4, 3, 0.37), 60.0);
  for (double v : flat.data()) EXPECT_EQ(v, 1.0);
  const double floor = std::pow(10.0, -60.0 / 20.0);
  const Image out = log_compress(Image(4, 1, {1.0, floor, 0.5 * floor, 0.0}), 60.0);
  EXPECT_NEAR(out.data()[1], 0.0, 1e-12);
  EXPECT_EQ(out.data()[2], 0.0);
  EXPECT_EQ(out.data()[3], 0.0);
}

TEST(LogCompress, RejectsDegenerateInput) {
  EXPECT_THROW(log_compress(Image(3, 3, 0.0), 60.0), std::invalid_argument);
  EXPECT_THROW(log_compress(Image(3, 3, 1.0), 0.0), std::invalid_argument);
}

TEST(Bicubic, ConstantStaysConstant) {
  const BModeImage src(Image(97, 191, 0.42), grid_of(97, 191), StageTag::compounded);
  for (auto [w, h] : {std::pair<std::size_t, std::size_t>{512, 512}, {13, 7}, {2, 2}}) {
    const BModeImage out = bicubic_resize(src, w, h);
    for (double v : out.pixels.data()) ASSERT_NEAR(v, 0.42, 1e-12);
  }
}

TEST(Bicubic, SameSizeIsIdentity) {
  const BModeImage src = random_bmode(31, 17, 3);
  const BModeImage out = bicubic_resize(src, 31, 17);
  for (std::size_t i = 0; i < src.pixels.size(); ++i) {
    ASSERT_NEAR(out.pixels.data()[i], src.pixels.data()[i], 1e-12);
  }
}

TEST(Bicubic, ReproducesBilinearRamp) {
  // f(x, y) = 0.1 + 0.5 x + 0.3 y + 0.05 x y on the unit square, sampled corner-aligned.
  auto ramp = [](double x, double y) { return 0.1 + 0.5 * x + 0.3 * y + 0.05 * x * y; };
  Image src(97, 191);
  for (std::size_t r = 0; r < 191; ++r) {
    for (std::size_t c = 0; c < 97; ++c) src.at(r, c) = ramp(c / 96.0, r / 190.0);
  }
  const Image out = bicubic_resize(src, 512, 512);
  double worst = 0.0;
  for (std::size_t r = 0; r < 512; ++r) {
    for (std::size_t c = 0; c < 512; ++c) {
      worst = std::max(worst, std::abs(out.at(r, c) - ramp(c / 511.0, r / 511.0)));
    }
  }
  EXPECT_LE(worst, 1e-6);
}

TEST(Bicubic, BModeOutputStaysInUnitRange) {
  const BModeImage src = random_bmode(20, 20, 8);
  const BModeImage out = bicubic_resize(src, 77, 64);
  for (double v : out.pixels.data()) ASSERT_TRUE(v >= 0.0 && v <= 1.0);
  EXPECT_EQ(out.grid.width, 77u);
  EXPECT_EQ(out.grid.lateral_min, src.grid.lateral_min);
}

TEST(Bicubic, RejectsTinyOutput) {
  EXPECT_THROW(bicubic_resize(Image(4, 4, 0.5), 1, 4), std::invalid_argument);
}

TEST(HistogramMatch, SelfMatchWithinOneBin) {
  const BModeImage img = random_bmode(64, 48, 11);
  const BModeImage out = histogram_match(img, img);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    ASSERT_LE(std::abs(out.pixels.data()[i] - img.pixels.data()[i]), 1.0 / 256.0);
  }
}

TEST(HistogramMatch, UniformSourceOntoConcentratedReference) {
  Image uniform(256, 4);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 256; ++c) uniform.at(r, c) = (c + 0.5) / 256.0;
  }
  Image ref(10, 10, 0.499);
  for (std::size_t i = 0; i < 50; ++i) ref.data()[i] = 0.501;
  const BModeImage out =
      histogram_match(BModeImage(uniform, grid_of(256, 4), StageTag::compounded),
                      BModeImage(ref, grid_of(10, 10), StageTag::compounded));
  for (double v : out.pixels.data()) ASSERT_LE(std::abs(v - 0.5), 1.0 / 256.0);
}

// Exhaustive oracle: per pixel, count source pixels in lower-or-equal bins, then scan every
// reference bin counting reference pixels at or below it.
double brute_force_match(const Image& src, const Image& ref, double v) {
  double f = 0.0;
  for (double q : src.data()) f += intensity_bin(q) <= intensity_bin(v) ? 1.0 : 0.0;
  f /= static_cast<double>(src.size());
  for (std::size_t c = 0; c < 256; ++c) {
    double g = 0.0;
    for (double q : ref.data()) g += intensity_bin(q) <= c ? 1.0 : 0.0;
    g /= static_cast<double>(ref.size());
    if (g >= f) return (c + 0.5) / 256.0;
  }
  return 255.5 / 256.0;
}

TEST(HistogramMatch, FourByFourAgainstExhaustiveOracle) {
  const Image src(4, 4, {0.05, 0.10, 0.10, 0.20, 0.30, 0.30, 0.30, 0.45, 0.50, 0.62, 0.70, 0.70,
                         0.80, 0.85, 0.90, 0.99});
  Image ref(4, 4, 0.75);
  for (std::size_t i = 0; i < 6; ++i) ref.data()[i] = 0.25;
  const BModeImage out = histogram_match(BModeImage(src, grid_of(4, 4), StageTag::compounded),
                                         BModeImage(ref, grid_of(4, 4), StageTag::compounded));
  std::size_t low = 0;
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_DOUBLE_EQ(out.pixels.data()[i], brute_force_match(src, ref, src.data()[i])) << i;
    low += out.pixels.data()[i] < 0.5 ? 1 : 0;
  }
  // Source CDF reaches 4/16 at 0.20 and 7/16 at 0.30; the reference jumps at 6/16.
  EXPECT_EQ(low, 4u);
  EXPECT_DOUBLE_EQ(out.pixels.data()[0], 64.5 / 256.0);
  EXPECT_DOUBLE_EQ(out.pixels.data()[15], 192.5 / 256.0);
}

TEST(HistogramMatch, MappingIsMonotoneAndCdfTracksReference) {
  const ReferenceCdf& reference = default_reference_cdf();
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Image src(128, 96);
    const auto u = testing::uniform_values(src.size(), seed);
    for (std::size_t i = 0; i < src.size(); ++i) src.data()[i] = u[i] * u[i];  // skewed
    const BModeImage in(src, grid_of(128, 96), StageTag::compounded);
    const BModeImage out = histogram_match(in, reference);

    std::vector<std::size_t> order(src.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return src.data()[a] < src.data()[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
      ASSERT_LE(out.pixels.data()[order[i - 1]], out.pixels.data()[order[i]]);
    }

    const ReferenceCdf src_cdf = ReferenceCdf::from_image(src);
    double max_atom = src_cdf.values[0];
    for (std::size_t b = 1; b < 256; ++b) {
      max_atom = std::max(max_atom, src_cdf.values[b] - src_cdf.values[b - 1]);
    }
    const ReferenceCdf out_cdf = ReferenceCdf::from_image(out.pixels);
    for (std::size_t b = 0; b < 256; ++b) {
      ASSERT_LE(std::abs(out_cdf.values[b] - reference.values[b]), max_atom + 1e-12) << b;
    }
  }
}

TEST(HistogramMatch, ConstantSourceTakesReferenceMedian) {
  const BModeImage src(Image(5, 5, 0.3), grid_of(5, 5), StageTag::compounded);
  const ReferenceCdf& ref = default_reference_cdf();
  const BModeImage out = histogram_match(src, ref);
  for (double v : out.pixels.data()) EXPECT_EQ(v, ref.median());
}

TEST(HistogramMatch, DegenerateReferenceRejected) {
  const BModeImage src = random_bmode(5, 5, 1);
  const BModeImage flat(Image(5, 5, 0.3), grid_of(5, 5), StageTag::compounded);
  EXPECT_THROW(histogram_match(src, flat), std::invalid_argument);
}

TEST(ReferenceCdfFile, RoundTripAndValidation) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / "pwe_cdf_test.cdf";
  const ReferenceCdf& cdf = default_reference_cdf();
  save_reference_cdf(cdf, path);
  EXPECT_EQ(std::filesystem::file_size(path), 256u * 8u);
  EXPECT_EQ(load_reference_cdf(path), cdf);

  ReferenceCdf bad = cdf;
  bad.values[10] = bad.values[9] - 0.1;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  ReferenceCdf unfinished = cdf;
  unfinished.values.back() = 0.99;
  EXPECT_THROW(unfinished.validate(), std::invalid_argument);

  std::filesystem::resize_file(path, 100);
  EXPECT_THROW(load_reference_cdf(path), FormatError);
  std::filesystem::remove(path);
}

TEST(ReferenceCdfFile, BundledTemplateMatchesGenerator) {
  const char* dir = std::getenv("PWE_DATA_DIR");
  if (dir == nullptr) GTEST_SKIP() << "PWE_DATA_DIR not set";
  EXPECT_EQ(load_reference_cdf(std::filesystem::path(dir) / "rayleigh_reference.cdf"),
            rayleigh_reference_cdf());
}

TEST(Unsharp, ConstantImageUnchanged) {
  const BModeImage src(Image(20, 15, 0.6), grid_of(20, 15), StageTag::compounded);
  const BModeImage out = unsharp_mask(src, 3.0, 0.8);
  for (double v : out.pixels.data()) ASSERT_NEAR(v, 0.6, 1e-12);
}

TEST(Unsharp, ZeroAmountIsIdentity) {
  const BModeImage src = random_bmode(33, 21, 4);
  EXPECT_EQ(unsharp_mask(src, 2.0, 0.0).pixels, src.pixels);
}

TEST(Unsharp, StepEdgeOvershootsAgainstDirectConvolution) {
  Image row(11, 1, 0.0);
  for (std::size_t c = 5; c < 11; ++c) row.at(0, c) = 1.0;
  const double sigma = 2.0;
  // Direct convolution oracle: full kernel over offsets -8..8 with clamped indices.
  std::vector<double> expected(11);
  double norm = 0.0;
  for (int d = -8; d <= 8; ++d) norm += std::exp(-0.5 * d * d / (sigma * sigma));
  for (int c = 0; c < 11; ++c) {
    double blur = 0.0;
    for (int d = -8; d <= 8; ++d) {
      const int j = std::clamp(c + d, 0, 10);
      blur += std::exp(-0.5 * d * d / (sigma * sigma)) / norm * row.at(0, j);
    }
    expected[c] = row.at(0, c) + 1.0 * (row.at(0, c) - blur);
  }
  const Image out = unsharp_enhance(row, sigma, 1.0);
  double peak = 0.0;
  for (int c = 0; c < 11; ++c) {
    EXPECT_NEAR(out.at(0, c), expected[c], 1e-12);
    peak = std::max(peak, out.at(0, c));
  }
  EXPECT_GT(peak, 1.0);
  const BModeImage clamped =
      unsharp_mask(BModeImage(row, grid_of(11, 1), StageTag::compounded), sigma, 1.0);
  for (double v : clamped.pixels.data()) EXPECT_TRUE(v >= 0.0 && v <= 1.0);
}

TEST(Unsharp, CommutesWithHorizontalFlip) {
  const BModeImage src = random_bmode(40, 30, 6);
  const Image a = unsharp_mask(src, 2.5, 0.8).pixels.flipped_horizontally();
  const BModeImage flipped(src.pixels.flipped_horizontally(), src.grid, src.tag);
  const Image b = unsharp_mask(flipped, 2.5, 0.8).pixels;
  EXPECT_EQ(a, b);
}

TEST(Unsharp, RejectsInvalidParameters) {
  const BModeImage src = random_bmode(8, 8, 1);
  EXPECT_THROW(unsharp_mask(src, 0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(unsharp_mask(src, 1.0, -0.5), std::invalid_argument);
}

TEST(PwimIo, RoundTripIsBitExact) {
  BModeImage img = random_bmode(13, 9, 2);
  quantize_to_file_precision(img.pixels);
  img.tag = StageTag::stage1_output;
  std::stringstream ss;
  write_pwim(ss, img);
  EXPECT_EQ(ss.str().size(), 4u + 12u + 32u + 1u + 13u * 9u * 4u);
  const BModeImage back = read_pwim(ss);
  EXPECT_EQ(back.pixels, img.pixels);
  EXPECT_EQ(back.grid, img.grid);
  EXPECT_EQ(back.tag, StageTag::stage1_output);
}

TEST(PwimIo, CorruptFilesRejected) {
  std::stringstream ss;
  write_pwim(ss, random_bmode(6, 6, 3));
  std::string bytes = ss.str();
  std::string bad_magic = bytes;
  bad_magic[1] = 'Q';
  std::stringstream a(bad_magic);
  EXPECT_THROW(read_pwim(a), FormatError);
  std::string bad_tag = bytes;
  bad_tag[48] = 9;
  std::stringstream b(bad_tag);
  EXPECT_THROW(read_pwim(b), FormatError);
  std::stringstream c(bytes.substr(0, bytes.size() - 3));
  EXPECT_THROW(read_pwim(c), FormatError);
}

TEST(PgmIo, EightBitRoundTrip) {
  Image img(7, 5);
  for (std::size_t i = 0; i < img.size(); ++i) img.data()[i] = static_cast<double>(i * 7 % 256) / 255.0;
  const auto path = std::filesystem::temp_directory_path() / "pwe_pgm_test.pgm";
  save_pgm(img, path);
  const Image back = load_pgm(path);
  for (std::size_t i = 0; i < img.size(); ++i) EXPECT_NEAR(back.data()[i], img.data()[i], 1e-12);
  std::filesystem::remove(path);
}

TEST(GroundTruth, PointTargetYields512Image) {
  const auto frames = acq::acquire_sequence(acq::TransducerGeometry{}, acq::point_target(0.0, 0.02),
                                            acq::PlaneWaveSequence{}, acq::SimulationOptions{});
  const BModeImage gt = make_ground_truth(frames);
  EXPECT_EQ(gt.width(), 512u);
  EXPECT_EQ(gt.height(), 512u);
  EXPECT_EQ(gt.tag, StageTag::filtered_ground_truth);
  gt.validate();
}

TEST(GroundTruth, WithoutFiltersEqualsCompoundedStage) {
  acq::SimulationOptions opt;
  opt.noise_sigma = 0.02;
  opt.noise_seed = 5;
  const auto frames = acq::acquire_sequence(acq::TransducerGeometry{}, acq::point_target(0.003, 0.015),
                                            acq::PlaneWaveSequence{}, opt);
  EnhanceParams p;
  const GroundTruthStages stages = ground_truth_stages(frames, p);
  p.apply_histogram_match = false;
  p.apply_unsharp = false;
  const BModeImage bare = make_ground_truth(frames, p);
  EXPECT_EQ(bare.pixels, stages.compounded.pixels);
  EXPECT_EQ(bare.tag, StageTag::compounded);
  EXPECT_NE(stages.ground_truth.pixels, stages.compounded.pixels);
}

}  // namespace
}  // namespace pwe::img

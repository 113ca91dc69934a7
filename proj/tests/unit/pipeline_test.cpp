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

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "pwe/acq/phantoms.hpp"
#include "pwe/acq/rf_io.hpp"
#include "pwe/acq/simulate.hpp"
#include "pwe/common/error.hpp"
#include "pwe/imgproc/histogram.hpp"
#include "pwe/imgproc/image_io.hpp"
#include "pwe/nn/weights_io.hpp"
#include "pwe/pipeline/bench.hpp"
#include "pwe/pipeline/report.hpp"
#include "support/random.hpp"

namespace pwe::pipeline {
namespace {

namespace fs = std::filesystem;

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pwe_pipeline_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Small generators with random weights written next to the test outputs.
  PipelineConfig small_config(Mode mode, std::size_t size = 64) {
    PipelineConfig c;
    c.mode = mode;
    c.enhance.output_width = c.enhance.output_height = size;
    for (auto* g : {&c.stage1, &c.stage2}) {
      g->width = g->height = size;
      g->filters = {4, 8};
    }
    c.stage1_weights = dir_ / "stage1.pwnn";
    c.stage2_weights = dir_ / "stage2.pwnn";
    nn::save_weights(nn::init_weights<float>(nn::build_generator(c.stage1), 3, 0.2), c.stage1_weights);
    nn::save_weights(nn::init_weights<float>(nn::build_generator(c.stage2), 4, 0.2), c.stage2_weights);
    return c;
  }

  img::BModeImage random_input(std::size_t size, std::uint64_t seed) const {
    return img::BModeImage(img::Image(size, size, pwe::testing::uniform_values(size * size, seed, 0.0, 1.0)),
                           bf::default_grid().resampled(size, size), img::StageTag::plane_wave_input);
  }

  static std::string bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

TEST_F(PipelineTest, ConfigRoundTripAndErrors) {
  PipelineConfig c = small_config(Mode::stage1_plus_2);
  c.bench.duration_s = 2.5;
  c.single_thread = true;
  const PipelineConfig back = PipelineConfig::from_key_values(c.to_key_values());
  EXPECT_EQ(back.to_key_values().entries(), c.to_key_values().entries());
  EXPECT_EQ(back.stage1.filters, (std::vector<std::size_t>{4, 8}));

  KeyValueFile kv = c.to_key_values();
  kv.set("stage3_weights", "x");
  EXPECT_THROW(PipelineConfig::from_key_values(kv), ConfigError);
  kv = c.to_key_values();
  kv.set("mode", "stage3");
  EXPECT_THROW(PipelineConfig::from_key_values(kv), ConfigError);
  kv = c.to_key_values();
  kv.set("bench_duration_s", "0");
  EXPECT_THROW(PipelineConfig::from_key_values(kv), ConfigError);
  kv = c.to_key_values();
  kv.set("output_width", "abc");
  EXPECT_THROW(PipelineConfig::from_key_values(kv), ConfigError);
}

TEST_F(PipelineTest, MissingWeightsFailBeforeCompute) {
  PipelineConfig c = small_config(Mode::stage1);
  c.stage1_weights = dir_ / "absent.pwnn";
  EXPECT_THROW(Pipeline{c}, ConfigError);
  c.stage1_weights.clear();
  EXPECT_THROW(Pipeline{c}, ConfigError);
  c = small_config(Mode::stage2_only);
  c.stage2.filters = {4, 8, 16};
  try {
    Pipeline p(c);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("stage2_weights"), std::string::npos) << e.what();
  }
  c = small_config(Mode::histogram_only);
  c.stage1_weights = dir_ / "absent.pwnn";
  EXPECT_NO_THROW(Pipeline{c});
}

TEST_F(PipelineTest, HistogramOnlyDelegatesToMatching) {
  const Pipeline p(small_config(Mode::histogram_only));
  const img::BModeImage in = random_input(64, 1);
  const PipelineOutput out = p.process(in);
  ASSERT_TRUE(out.histogram.has_value());
  EXPECT_FALSE(out.stage1 || out.stage2);
  const img::BModeImage expected = img::histogram_match(in, img::default_reference_cdf());
  EXPECT_EQ(out.histogram->pixels, expected.pixels);
  EXPECT_EQ(out.final_image().tag, img::StageTag::histogram_matched);
}

TEST_F(PipelineTest, FullSizeTwoStageShapes) {
  const Pipeline p(small_config(Mode::stage1_plus_2, 512));
  const PipelineOutput out = p.process(random_input(512, 2));
  ASSERT_TRUE(out.stage1 && out.stage2);
  EXPECT_EQ(out.stage1->width(), 512u);
  EXPECT_EQ(out.stage1->height(), 512u);
  EXPECT_EQ(out.stage2->width(), 512u);
  EXPECT_EQ(out.stage2->height(), 512u);
  EXPECT_EQ(out.stage1->tag, img::StageTag::stage1_output);
  EXPECT_EQ(out.stage2->tag, img::StageTag::stage2_output);
}

TEST_F(PipelineTest, RunIsDeterministicAndStagesCompose) {
  const PipelineConfig c = small_config(Mode::stage1_plus_2);
  const fs::path input = dir_ / "input.pwim";
  img::save_pwim(random_input(64, 3), input);
  const RunArtifacts a = run_pipeline(c, input, dir_ / "a");
  const RunArtifacts b = run_pipeline(c, input, dir_ / "b");
  ASSERT_EQ(a.files.size(), 6u);
  for (std::size_t i = 0; i < a.files.size(); ++i) {
    EXPECT_EQ(bytes(a.files[i]), bytes(b.files[i])) << a.files[i];
  }

  PipelineConfig second = c;
  second.mode = Mode::stage2_only;
  const RunArtifacts chained = run_pipeline(second, dir_ / "a" / "stage1_output.pwim", dir_ / "c");
  EXPECT_EQ(chained.output.stage2->pixels, a.output.stage2->pixels);
  EXPECT_EQ(bytes(dir_ / "c" / "stage2_output.pwim"), bytes(dir_ / "a" / "stage2_output.pwim"));
  EXPECT_EQ(bytes(dir_ / "c" / "stage2_output.pgm"), bytes(dir_ / "a" / "stage2_output.pgm"));
}

TEST_F(PipelineTest, RfInputWithMetricsTable) {
  PipelineConfig c = small_config(Mode::stage1);
  c.rois = dir_ / "rois.txt";
  metrics::standard_rois(c.enhance.grid.resampled(64, 64)).save(c.rois);
  const acq::RFFrame frame =
      acq::simulate_rf(acq::TransducerGeometry{}, acq::point_target(0.0, 0.02), 0.0);
  acq::save_rf(frame, dir_ / "frame.pwrf");
  const RunArtifacts r = run_pipeline(c, dir_ / "frame.pwrf", dir_ / "out");
  ASSERT_EQ(r.files.back().filename(), "metrics.tsv");
  const std::string table = bytes(r.files.back());
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 1 + 2);
  EXPECT_EQ(r.output.input.width(), 64u);
  EXPECT_GE(r.output.timings.size(), 3u);
  EXPECT_EQ(r.output.timings.front().stage, "beamform");
}

TEST_F(PipelineTest, UnknownInputFormat) {
  std::ofstream(dir_ / "junk.bin") << "JUNKDATA";
  EXPECT_THROW(run_pipeline(small_config(Mode::histogram_only), dir_ / "junk.bin", dir_ / "o"),
               FormatError);
}

std::vector<acq::RFFrame> point_frames() {
  return {acq::simulate_rf(acq::TransducerGeometry{}, acq::point_target(0.0, 0.02), 0.0)};
}

TEST_F(PipelineTest, BenchAccounting) {
  for (bool single : {true, false}) {
    for (bool beamforming : {true, false}) {
      PipelineConfig c = small_config(Mode::stage1);
      c.bench.warmup_frames = 2;
      // Excluded formation time is not on the benchmark clock, so keep that case short.
      c.bench.duration_s = beamforming ? 0.4 : 0.05;
      c.bench.window_s = beamforming ? 0.1 : 0.01;
      c.bench.include_beamforming = beamforming;
      c.single_thread = single;
      const Pipeline p(c);
      const FrameRateReport r = bench_fps(p, replay_source(point_frames()));
      EXPECT_GT(r.mean_fps, 0.0);
      EXPECT_GE(r.std_fps, 0.0);
      EXPECT_GE(r.measured_seconds, c.bench.duration_s);
      EXPECT_GE(static_cast<double>(r.frames_processed), c.bench.duration_s * r.mean_fps * 0.9);
      double sum = 0.0;
      for (const StageTiming& t : r.breakdown) sum += t.milliseconds;
      EXPECT_LE(sum, r.mean_frame_ms + 1e-9);
      EXPECT_EQ(r.breakdown.front().stage == "beamform", beamforming);
      EXPECT_EQ(r.pipelined, !single && beamforming);
      EXPECT_GE(r.processing_fps, r.mean_fps * 0.5);
    }
  }
}

TEST_F(PipelineTest, BenchNeedsEnoughFrames) {
  PipelineConfig c = small_config(Mode::histogram_only);
  c.bench.warmup_frames = 10;
  c.single_thread = true;
  const Pipeline p(c);
  EXPECT_THROW(bench_fps(p, replay_source(point_frames(), 5)), InsufficientDataError);
  c.single_thread = false;
  EXPECT_THROW(bench_fps(Pipeline(c), replay_source(point_frames(), 10)), InsufficientDataError);
}

TEST(Report, MetricsTableRows) {
  std::ostringstream empty;
  write_metrics_table(empty, {});
  EXPECT_EQ(empty.str(), "image_set\tmethod\tnrmse\tssim\tcnr\tspeckle_std\tfiber_std\n");
  std::vector<MetricsRecord> records;
  for (const char* set : {"a", "b", "c"}) {
    for (const char* m : {"pw_input", "stage1", "stage2"}) records.push_back({set, m, {}});
  }
  std::ostringstream one, two;
  write_metrics_table(one, records);
  write_metrics_table(two, records);
  EXPECT_EQ(one.str(), two.str());
  const std::string s = one.str();
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 1 + 3 * 3);
  std::ostringstream fps;
  write_fps_table(fps, {});
  const std::string header = fps.str();
  EXPECT_EQ(std::count(header.begin(), header.end(), '\n'), 1);
}

}  // namespace
}  // namespace pwe::pipeline

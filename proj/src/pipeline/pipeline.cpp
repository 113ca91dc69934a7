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

#include "pwe/pipeline/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pwe/acq/rf_io.hpp"
#include "pwe/beamform/das.hpp"
#include "pwe/common/error.hpp"
#include "pwe/imgproc/histogram.hpp"
#include "pwe/imgproc/image_io.hpp"
#include "pwe/imgproc/resize.hpp"
#include "pwe/nn/builders.hpp"
#include "pwe/nn/weights_io.hpp"
#include "pwe/pipeline/report.hpp"

namespace pwe::pipeline {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

nn::ModelGraph load_model(const nn::GeneratorConfig& gc, const std::filesystem::path& path,
                          const char* key) {
  const nn::GraphSpec graph = nn::build_generator(gc);
  try {
    return {graph, nn::load_weights_for(graph, path).weights};
  } catch (const std::exception& e) {
    throw ConfigError(std::string(key) + " (" + path.string() + "): " + e.what());
  }
}

}  // namespace

const img::BModeImage& PipelineOutput::final_image() const {
  if (stage2) return *stage2;
  if (stage1) return *stage1;
  if (histogram) return *histogram;
  return input;
}

nn::Tensor to_tensor(const img::Image& image) {
  nn::Tensor t({1, image.height(), image.width(), 1});
  for (std::size_t i = 0; i < image.size(); ++i) t[i] = static_cast<float>(image.data()[i]);
  return t;
}

img::Image to_image(const nn::Tensor& tensor) {
  tensor.require_nhwc("to_image");
  if (tensor.dim(0) != 1 || tensor.dim(3) != 1) {
    throw std::invalid_argument("to_image: expected a single one-channel image, got " +
                                nn::shape_string(tensor.shape()));
  }
  img::Image image(tensor.dim(2), tensor.dim(1));
  for (std::size_t i = 0; i < image.size(); ++i) image.data()[i] = tensor[i];
  return image;
}

Pipeline::Pipeline(PipelineConfig config) : config_(std::move(config)) {
  config_.check_files();
  reference_ = config_.reference_cdf.empty() ? img::default_reference_cdf()
                                             : img::load_reference_cdf(config_.reference_cdf);
  config_.enhance.reference = reference_;
  if (uses_stage1(config_.mode)) {
    stage1_ = load_model(config_.stage1, config_.stage1_weights, "stage1_weights");
  }
  if (uses_stage2(config_.mode)) {
    stage2_ = load_model(config_.stage2, config_.stage2_weights, "stage2_weights");
  }
}

img::BModeImage Pipeline::form_input(const acq::RFFrame& frame) const {
  return img::make_input_image(frame, config_.enhance);
}

img::BModeImage Pipeline::run_model(const nn::ModelGraph& model, const img::BModeImage& image,
                                    img::StageTag tag) const {
  img::Image out = to_image(model(to_tensor(image.pixels)));
  img::clamp_unit(out);
  return img::BModeImage(std::move(out), image.grid, tag);
}

PipelineOutput Pipeline::process(const img::BModeImage& input) const {
  input.validate();
  PipelineOutput out;
  const std::size_t w = config_.enhance.output_width, h = config_.enhance.output_height;
  auto t = Clock::now();
  out.input = (input.width() == w && input.height() == h) ? input : img::bicubic_resize(input, w, h);
  if (input.width() != w || input.height() != h) out.timings.push_back({"resize", elapsed_ms(t)});
  switch (config_.mode) {
    case Mode::histogram_only: {
      t = Clock::now();
      img::BModeImage matched = img::histogram_match(out.input, reference_);
      matched.tag = img::StageTag::histogram_matched;
      out.histogram = std::move(matched);
      out.timings.push_back({"histogram", elapsed_ms(t)});
      break;
    }
    case Mode::stage1:
    case Mode::stage1_plus_2: {
      t = Clock::now();
      out.stage1 = run_model(*stage1_, out.input, img::StageTag::stage1_output);
      out.timings.push_back({"stage1", elapsed_ms(t)});
      if (config_.mode == Mode::stage1_plus_2) {
        t = Clock::now();
        out.stage2 = run_model(*stage2_, *out.stage1, img::StageTag::stage2_output);
        out.timings.push_back({"stage2", elapsed_ms(t)});
      }
      break;
    }
    case Mode::stage2_only: {
      t = Clock::now();
      out.stage2 = run_model(*stage2_, out.input, img::StageTag::stage2_output);
      out.timings.push_back({"stage2", elapsed_ms(t)});
      break;
    }
  }
  return out;
}

PipelineOutput Pipeline::process(const acq::RFFrame& frame) const {
  auto t = Clock::now();
  const bf::ComplexImage beamformed =
      bf::das_beamform(frame, config_.enhance.grid, config_.enhance.f_number);
  const double beamform_ms = elapsed_ms(t);
  t = Clock::now();
  const img::BModeImage input =
      img::form_display_image(beamformed, config_.enhance, img::StageTag::plane_wave_input);
  const double display_ms = elapsed_ms(t);
  PipelineOutput out = process(input);
  out.timings.insert(out.timings.begin(), {{"beamform", beamform_ms}, {"display", display_ms}});
  return out;
}

namespace {

std::string read_magic(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  char buf[4] = {};
  in.read(buf, 4);
  return std::string(buf, static_cast<std::size_t>(in.gcount()));
}

}  // namespace

RunArtifacts run_pipeline(const PipelineConfig& config, const std::filesystem::path& input,
                          const std::filesystem::path& out_dir) {
  const Pipeline pipeline(config);
  std::optional<metrics::RoiSet> rois;
  if (!config.rois.empty()) rois = metrics::RoiSet::load(config.rois);

  RunArtifacts result;
  const std::string magic = read_magic(input);
  if (magic == "PWRF") {
    result.output = pipeline.process(acq::load_rf(input));
  } else if (magic == "PWIM") {
    result.output = pipeline.process(img::load_pwim(input));
  } else if (magic.rfind("P5", 0) == 0) {
    const img::Image pixels = img::load_pgm(input);
    result.output = pipeline.process(img::BModeImage(
        pixels, config.enhance.grid.resampled(pixels.width(), pixels.height()),
        img::StageTag::plane_wave_input));
  } else {
    throw FormatError(input.string() + ": not a PWRF, PWIM or PGM file");
  }

  std::filesystem::create_directories(out_dir);
  std::vector<MetricsRecord> records;
  const PipelineOutput& o = result.output;
  for (const img::BModeImage* pane : {&o.input, o.histogram ? &*o.histogram : nullptr,
                                      o.stage1 ? &*o.stage1 : nullptr,
                                      o.stage2 ? &*o.stage2 : nullptr}) {
    if (!pane) continue;
    const std::string stem(img::to_string(pane->tag));
    result.files.push_back(out_dir / (stem + ".pwim"));
    img::save_pwim(*pane, result.files.back());
    result.files.push_back(out_dir / (stem + ".pgm"));
    img::save_pgm(pane->pixels, result.files.back());
    if (rois) records.push_back({input.stem().string(), stem, metrics::evaluate(pane->pixels, *rois)});
  }
  if (rois) {
    std::ostringstream table;
    write_metrics_table(table, records);
    result.files.push_back(out_dir / "metrics.tsv");
    save_text(result.files.back(), table.str());
  }
  return result;
}

}  // namespace pwe::pipeline

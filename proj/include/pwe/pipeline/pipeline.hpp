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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pwe/acq/transducer.hpp"
#include "pwe/imgproc/image.hpp"
#include "pwe/metrics/metrics.hpp"
#include "pwe/nn/graph.hpp"
#include "pwe/pipeline/config.hpp"

namespace pwe::pipeline {

struct StageTiming {
  std::string stage;
  double milliseconds = 0.0;
};

struct PipelineOutput {
  img::BModeImage input;                      // plane-wave input after envelope, log, resize
  std::optional<img::BModeImage> histogram;   // histogram_only
  std::optional<img::BModeImage> stage1;
  std::optional<img::BModeImage> stage2;
  std::vector<StageTiming> timings;

  /// Last image produced by the configured mode.
  const img::BModeImage& final_image() const;
};

nn::Tensor to_tensor(const img::Image& image);
img::Image to_image(const nn::Tensor& tensor);

/// Configured processing chain with its models loaded. Construction fails with ConfigError before
/// any compute when a required weight file is missing or does not fit the declared graph.
class Pipeline {
 public:
  explicit Pipeline(PipelineConfig config);

  const PipelineConfig& config() const { return config_; }

  /// beamform at 0 degrees, envelope, log compression, bicubic resize.
  img::BModeImage form_input(const acq::RFFrame& frame) const;
  PipelineOutput process(const img::BModeImage& input) const;
  PipelineOutput process(const acq::RFFrame& frame) const;

 private:
  img::BModeImage run_model(const nn::ModelGraph& model, const img::BModeImage& image,
                            img::StageTag tag) const;

  PipelineConfig config_;
  img::ReferenceCdf reference_;
  std::optional<nn::ModelGraph> stage1_;
  std::optional<nn::ModelGraph> stage2_;
};

/// Files written by run_pipeline, keyed by stage.
struct RunArtifacts {
  PipelineOutput output;
  std::vector<std::filesystem::path> files;
};

/// Reads a PWRF (RF frame) or PWIM (image) input, processes it and writes `<stage>.pwim` and
/// `<stage>.pgm` for every produced pane into `out_dir`, plus `metrics.tsv` when the config names
/// an ROI file.
RunArtifacts run_pipeline(const PipelineConfig& config, const std::filesystem::path& input,
                          const std::filesystem::path& out_dir);

}  // namespace pwe::pipeline

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

#include "pwe/pipeline/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "pwe/common/error.hpp"

namespace pwe::pipeline {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::histogram_only: return "histogram_only";
    case Mode::stage1: return "stage1";
    case Mode::stage1_plus_2: return "stage1_plus_2";
    case Mode::stage2_only: return "stage2_only";
  }
  return "unknown";
}

Mode parse_mode(std::string_view text) {
  for (Mode m : {Mode::histogram_only, Mode::stage1, Mode::stage1_plus_2, Mode::stage2_only}) {
    if (to_string(m) == text) return m;
  }
  throw ConfigError("unknown mode '" + std::string(text) +
                    "' (histogram_only, stage1, stage1_plus_2, stage2_only)");
}

bool uses_stage1(Mode mode) { return mode == Mode::stage1 || mode == Mode::stage1_plus_2; }
bool uses_stage2(Mode mode) { return mode == Mode::stage1_plus_2 || mode == Mode::stage2_only; }

nn::GeneratorConfig PipelineConfig::default_stage1() {
  nn::GeneratorConfig c;
  c.role = nn::ModelRole::stage1_unet;
  return c;
}

nn::GeneratorConfig PipelineConfig::default_stage2() {
  nn::GeneratorConfig c;
  c.role = nn::ModelRole::generator_G;
  return c;
}

void PipelineConfig::validate() const {
  if (enhance.output_width == 0 || enhance.output_height == 0) {
    throw ConfigError("output_width and output_height must be positive");
  }
  if (!(enhance.dynamic_range_db > 0.0)) throw ConfigError("dynamic_range_db must be positive");
  if (!(enhance.f_number > 0.0)) throw ConfigError("f_number must be positive");
  if (!(bench.duration_s > 0.0)) throw ConfigError("bench_duration_s must be positive");
  if (!(bench.window_s > 0.0) || bench.window_s > bench.duration_s) {
    throw ConfigError("bench_window_s must be positive and no longer than bench_duration_s");
  }
  for (const auto* g : {&stage1, &stage2}) {
    if (g->height != enhance.output_height || g->width != enhance.output_width) {
      throw ConfigError("generator input size must equal the output image size");
    }
  }
  if (uses_stage1(mode) && stage1_weights.empty()) {
    throw ConfigError("mode " + std::string(to_string(mode)) + " needs stage1_weights");
  }
  if (uses_stage2(mode) && stage2_weights.empty()) {
    throw ConfigError("mode " + std::string(to_string(mode)) + " needs stage2_weights");
  }
}

void PipelineConfig::check_files() const {
  validate();
  auto require = [](const std::filesystem::path& p, const char* key) {
    if (!p.empty() && !std::filesystem::is_regular_file(p)) {
      throw ConfigError(std::string(key) + ": file not found: " + p.string());
    }
  };
  if (uses_stage1(mode)) require(stage1_weights, "stage1_weights");
  if (uses_stage2(mode)) require(stage2_weights, "stage2_weights");
  require(reference_cdf, "reference_cdf");
  require(rois, "rois");
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t x : v) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::string format_double(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

nn::TransposeSemantics parse_semantics(const std::string& text) {
  for (auto s : {nn::TransposeSemantics::crop_output, nn::TransposeSemantics::pad_input}) {
    if (nn::to_string(s) == text) return s;
  }
  throw ConfigError("unknown transpose_semantics '" + text + "'");
}

std::vector<std::size_t> filters(const KeyValueFile& kv, const std::string& key,
                                 const std::vector<std::size_t>& fallback) {
  if (!kv.contains(key)) return fallback;
  std::vector<std::size_t> out;
  for (long long v : kv.get_int_list(key)) {
    if (v <= 0) throw ConfigError(key + ": filter counts must be positive");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw ConfigError(key + ": empty filter list");
  return out;
}

std::size_t positive_size(const KeyValueFile& kv, const std::string& key, std::size_t fallback) {
  const long long v = kv.get_int(key, static_cast<long long>(fallback));
  if (v < 0) throw ConfigError(key + " must not be negative");
  return static_cast<std::size_t>(v);
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "mode", "stage1_weights", "stage2_weights", "reference_cdf", "rois", "f_number",
      "dynamic_range_db", "output_width", "output_height", "unsharp_sigma", "unsharp_amount",
      "stage1_filters", "stage2_filters", "transpose_semantics", "bench_warmup_frames",
      "bench_duration_s", "bench_window_s", "bench_include_beamforming", "single_thread", "seed"};
  return keys;
}

}  // namespace

KeyValueFile PipelineConfig::to_key_values() const {
  KeyValueFile kv;
  kv.set("mode", std::string(to_string(mode)));
  if (!stage1_weights.empty()) kv.set("stage1_weights", stage1_weights.string());
  if (!stage2_weights.empty()) kv.set("stage2_weights", stage2_weights.string());
  if (!reference_cdf.empty()) kv.set("reference_cdf", reference_cdf.string());
  if (!rois.empty()) kv.set("rois", rois.string());
  kv.set("f_number", format_double(enhance.f_number));
  kv.set("dynamic_range_db", format_double(enhance.dynamic_range_db));
  kv.set("output_width", std::to_string(enhance.output_width));
  kv.set("output_height", std::to_string(enhance.output_height));
  kv.set("unsharp_sigma", format_double(enhance.unsharp_sigma));
  kv.set("unsharp_amount", format_double(enhance.unsharp_amount));
  kv.set("stage1_filters", join(stage1.filters));
  kv.set("stage2_filters", join(stage2.filters));
  kv.set("transpose_semantics", std::string(nn::to_string(stage1.semantics)));
  kv.set("bench_warmup_frames", std::to_string(bench.warmup_frames));
  kv.set("bench_duration_s", format_double(bench.duration_s));
  kv.set("bench_window_s", format_double(bench.window_s));
  kv.set("bench_include_beamforming", bench.include_beamforming ? "true" : "false");
  kv.set("single_thread", single_thread ? "true" : "false");
  kv.set("seed", std::to_string(seed));
  return kv;
}

PipelineConfig PipelineConfig::from_key_values(const KeyValueFile& kv) {
  for (const auto& [key, value] : kv.entries()) {
    if (!known_keys().contains(key)) throw ConfigError("unknown config key '" + key + "'");
  }
  PipelineConfig c;
  try {
    c.mode = parse_mode(kv.get_string("mode", std::string(to_string(c.mode))));
    c.stage1_weights = kv.get_string("stage1_weights", "");
    c.stage2_weights = kv.get_string("stage2_weights", "");
    c.reference_cdf = kv.get_string("reference_cdf", "");
    c.rois = kv.get_string("rois", "");
    c.enhance.f_number = kv.get_double("f_number", c.enhance.f_number);
    c.enhance.dynamic_range_db = kv.get_double("dynamic_range_db", c.enhance.dynamic_range_db);
    c.enhance.output_width = positive_size(kv, "output_width", c.enhance.output_width);
    c.enhance.output_height = positive_size(kv, "output_height", c.enhance.output_height);
    c.enhance.unsharp_sigma = kv.get_double("unsharp_sigma", c.enhance.unsharp_sigma);
    c.enhance.unsharp_amount = kv.get_double("unsharp_amount", c.enhance.unsharp_amount);
    c.stage1.filters = filters(kv, "stage1_filters", c.stage1.filters);
    c.stage2.filters = filters(kv, "stage2_filters", c.stage2.filters);
    const auto semantics =
        parse_semantics(kv.get_string("transpose_semantics", std::string(nn::to_string(c.stage1.semantics))));
    for (auto* g : {&c.stage1, &c.stage2}) {
      g->semantics = semantics;
      g->width = c.enhance.output_width;
      g->height = c.enhance.output_height;
    }
    c.bench.warmup_frames = positive_size(kv, "bench_warmup_frames", c.bench.warmup_frames);
    c.bench.duration_s = kv.get_double("bench_duration_s", c.bench.duration_s);
    c.bench.window_s = kv.get_double("bench_window_s", c.bench.window_s);
    c.bench.include_beamforming = kv.get_bool("bench_include_beamforming", c.bench.include_beamforming);
    c.single_thread = kv.get_bool("single_thread", c.single_thread);
    c.seed = static_cast<std::uint64_t>(positive_size(kv, "seed", c.seed));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

PipelineConfig PipelineConfig::load(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw ConfigError("config file not found: " + path.string());
  }
  return from_key_values(KeyValueFile::load(path));
}

void PipelineConfig::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# pipeline configuration\n" << to_key_values().to_string();
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace pwe::pipeline

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

// Command-line front end. Every subcommand takes an optional key=value config file, positional
// paths, and the global --seed and --single-thread flags.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pwe/acq/phantoms.hpp"
#include "pwe/acq/rf_io.hpp"
#include "pwe/beamform/das.hpp"
#include "pwe/common/error.hpp"
#include "pwe/common/parallel.hpp"
#include "pwe/imgproc/ground_truth.hpp"
#include "pwe/imgproc/histogram.hpp"
#include "pwe/imgproc/image_io.hpp"
#include "pwe/nn/weights_io.hpp"
#include "pwe/pipeline/bench.hpp"
#include "pwe/pipeline/report.hpp"
#include "pwe/stats/power.hpp"
#include "pwe/stats/report.hpp"
#include "pwe/train/cyclegan.hpp"
#include "pwe/train/stage1.hpp"

namespace fs = std::filesystem;
using namespace pwe;

namespace {

struct Globals {
  std::optional<std::uint64_t> seed;
  bool single_thread = false;
  std::string config;
};

KeyValueFile config_file(const Globals& g) {
  return g.config.empty() ? KeyValueFile{} : KeyValueFile::load(g.config);
}

pipeline::PipelineConfig pipeline_config(const Globals& g) {
  pipeline::PipelineConfig c =
      g.config.empty() ? pipeline::PipelineConfig{} : pipeline::PipelineConfig::load(g.config);
  if (g.seed) c.seed = *g.seed;
  c.single_thread = c.single_thread || g.single_thread;
  return c;
}

std::vector<acq::RFFrame> load_frames(const std::vector<std::string>& paths) {
  std::vector<acq::RFFrame> frames;
  for (const auto& p : paths) frames.push_back(acq::load_rf(p));
  return frames;
}

void save_image(const img::BModeImage& image, const fs::path& out) {
  img::save_pwim(image, out);
  fs::path pgm = out;
  img::save_pgm(image.pixels, pgm.replace_extension(".pgm"));
  std::cout << "wrote " << out.string() << " and " << pgm.string() << '\n';
}

// simulate: phantom=point|speckle, point_lateral_mm, point_axial_mm, angles_deg, repeats,
// noise_sigma. Writes one PWRF file per transmit.
int run_simulate(const Globals& g, const fs::path& out_dir) {
  const KeyValueFile kv = config_file(g);
  const std::uint64_t seed = g.seed.value_or(static_cast<std::uint64_t>(kv.get_int("seed", 1)));
  const std::string phantom = kv.get_string("phantom", "speckle");
  acq::ScattererField field;
  if (phantom == "point") {
    field = acq::point_target(kv.get_double("point_lateral_mm", 0.0) * 1e-3,
                              kv.get_double("point_axial_mm", 20.0) * 1e-3);
  } else if (phantom == "speckle") {
    field = acq::speckle_phantom(acq::standard_phantom_spec(), seed);
  } else {
    throw ConfigError("phantom must be 'point' or 'speckle', got '" + phantom + "'");
  }
  acq::PlaneWaveSequence seq;
  if (kv.contains("angles_deg")) {
    seq.angles_deg.clear();
    std::stringstream ss(kv.get_string("angles_deg"));
    for (std::string item; std::getline(ss, item, ',');) seq.angles_deg.push_back(std::stod(item));
  }
  seq.repeats = static_cast<std::size_t>(kv.get_int("repeats", static_cast<long long>(seq.repeats)));
  acq::SimulationOptions options;
  options.noise_sigma = kv.get_double("noise_sigma", 0.0);
  options.noise_seed = seed;
  const auto frames = acq::acquire_sequence(acq::TransducerGeometry{}, field, seq, options);
  fs::create_directories(out_dir);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    std::ostringstream name;
    name << "frame_" << (i < 10 ? "0" : "") << i << ".pwrf";
    acq::save_rf(frames[i], out_dir / name.str());
  }
  std::cout << "wrote " << frames.size() << " frames to " << out_dir.string() << '\n';
  return 0;
}

int run_beamform(const Globals& g, const std::vector<std::string>& inputs, const fs::path& out) {
  const pipeline::PipelineConfig c = pipeline_config(g);
  std::vector<bf::ComplexImage> images;
  for (const auto& f : load_frames(inputs)) {
    images.push_back(bf::das_beamform(f, c.enhance.grid, c.enhance.f_number));
  }
  const auto tag = images.size() == 1 ? img::StageTag::plane_wave_input : img::StageTag::compounded;
  save_image(img::form_display_image(bf::compound(images), c.enhance, tag), out);
  return 0;
}

int run_enhance(const Globals& g, const std::vector<std::string>& inputs, const fs::path& out) {
  pipeline::PipelineConfig c = pipeline_config(g);
  if (!c.reference_cdf.empty()) c.enhance.reference = img::load_reference_cdf(c.reference_cdf);
  save_image(img::make_ground_truth(load_frames(inputs), c.enhance), out);
  return 0;
}

int run_infer(const Globals& g, const fs::path& input, const fs::path& out_dir) {
  const auto artifacts = pipeline::run_pipeline(pipeline_config(g), input, out_dir);
  for (const auto& f : artifacts.files) std::cout << "wrote " << f.string() << '\n';
  for (const auto& t : artifacts.output.timings) {
    std::cout << t.stage << '\t' << t.milliseconds << " ms\n";
  }
  return 0;
}

int run_train(const Globals& g, const std::string& which, const fs::path& out_dir) {
  KeyValueFile kv = config_file(g);
  if (g.seed) kv.set("seed", std::to_string(*g.seed));
  fs::create_directories(out_dir);
  if (which == "stage1") {
    const auto config = train::Stage1Config::from_key_values(kv);
    const auto result = train::train_stage1_toy(config);
    nn::save_weights(result.model.weights, out_dir / "stage1.pwnn");
    result.log.save(out_dir / "stage1_log.tsv");
    const auto val = result.log.column("val_l1");
    std::cout << "validation L1 " << val.front() << " -> " << result.best_validation_loss
              << " (best epoch " << result.best_epoch << "), test L1 " << result.test_loss << '\n';
  } else if (which == "cyclegan") {
    const auto config = train::CycleGanConfig::from_key_values(kv);
    const auto result = train::train_cyclegan_toy(config);
    nn::save_weights(result.models.G.weights, out_dir / "generator_G.pwnn");
    nn::save_weights(result.models.F.weights, out_dir / "generator_F.pwnn");
    nn::save_weights(result.models.DX.weights, out_dir / "discriminator_X.pwnn");
    nn::save_weights(result.models.DY.weights, out_dir / "discriminator_Y.pwnn");
    result.log.save(out_dir / "cyclegan_log.tsv");
    std::cout << "steps " << result.history.size() << ", held-out cycle loss "
              << result.validation_cycle << '\n';
  } else {
    throw ConfigError("train-toy: expected 'stage1' or 'cyclegan', got '" + which + "'");
  }
  std::cout << "outputs in " << out_dir.string() << '\n';
  return 0;
}

int run_metrics(const std::vector<std::string>& images, const std::string& reference,
                const std::string& rois_path, const std::string& out) {
  std::optional<img::BModeImage> gt;
  if (!reference.empty()) gt = img::load_pwim(reference);
  std::vector<pipeline::MetricsRecord> records;
  for (const auto& path : images) {
    const img::BModeImage image = img::load_pwim(path);
    const metrics::RoiSet rois = rois_path.empty()
                                     ? metrics::standard_rois(image.grid)
                                     : metrics::RoiSet::load(rois_path);
    records.push_back({fs::path(path).stem().string(), std::string(img::to_string(image.tag)),
                       metrics::evaluate(image.pixels, rois, gt ? &gt->pixels : nullptr)});
  }
  std::ostringstream table;
  pipeline::write_metrics_table(table, records);
  if (out.empty()) std::cout << table.str();
  else pipeline::save_text(out, table.str());
  return 0;
}

int run_stats(const std::string& scores, const std::string& out, bool power_only,
              const stats::PowerQuery& query) {
  if (power_only) {
    const std::size_t n = stats::sample_size(query);
    std::cout << "sample_size\t" << n << "\npower_at_n\t"
              << stats::repeated_measures_power(n, query.effect_size, query.alpha, query.groups)
              << '\n';
    return 0;
  }
  if (scores.empty()) throw ConfigError("stats: a score table is required unless --power is given");
  const std::string report = stats::format_report(stats::analyze(stats::ScoreTable::load(scores)));
  if (out.empty()) std::cout << report;
  else pipeline::save_text(out, report);
  return 0;
}

int run_bench(const Globals& g, const std::vector<std::string>& inputs,
              const std::vector<std::string>& modes, const std::string& out) {
  const pipeline::PipelineConfig base = pipeline_config(g);
  std::vector<pipeline::Mode> list;
  for (const auto& m : modes) list.push_back(pipeline::parse_mode(m));
  if (list.empty()) list.push_back(base.mode);
  const auto frames = load_frames(inputs);
  std::vector<pipeline::FrameRateReport> reports;
  for (pipeline::Mode mode : list) {
    pipeline::PipelineConfig c = base;
    c.mode = mode;
    const pipeline::Pipeline p(c);
    reports.push_back(pipeline::bench_fps(p, pipeline::replay_source(frames)));
    std::cerr << to_string(mode) << ": " << reports.back().mean_fps << " +/- "
              << reports.back().std_fps << " FPS\n";
  }
  std::ostringstream table;
  pipeline::write_fps_table(table, reports);
  if (out.empty()) std::cout << table.str();
  else pipeline::save_text(out, table.str());
  return 0;
}

int run_init_model(const Globals& g, int stage, const fs::path& out) {
  const pipeline::PipelineConfig c = pipeline_config(g);
  const nn::GraphSpec graph = nn::build_generator(stage == 1 ? c.stage1 : c.stage2);
  nn::save_weights(nn::init_weights<float>(graph, c.seed), out);
  std::cout << "wrote " << graph.layers.size() << "-layer " << nn::to_string(graph.role)
            << " weights to " << out.string() << '\n';
  return 0;
}

int run_make_reference(const std::string& from_image, const fs::path& out) {
  const img::ReferenceCdf cdf = from_image.empty()
                                    ? img::rayleigh_reference_cdf()
                                    : img::ReferenceCdf::from_image(img::load_pwim(from_image).pixels);
  img::save_reference_cdf(cdf, out);
  std::cout << "wrote " << out.string() << '\n';
  return 0;
}

int run_make_rois(std::size_t width, std::size_t height, const fs::path& out) {
  metrics::standard_rois(bf::default_grid().resampled(width, height)).save(out);
  std::cout << "wrote " << out.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane-wave ultrasound enhancement toolkit"};
  app.require_subcommand(1);
  Globals g;
  std::uint64_t seed = 0;
  auto* seed_opt = app.add_option("--seed", seed, "Random seed (overrides the config)");
  app.add_flag("--single-thread", g.single_thread, "Serial execution for bit-reproducible runs");
  app.add_option("-c,--config", g.config, "key=value configuration file")->check(CLI::ExistingFile);
  app.fallthrough();

  std::string out;
  std::vector<std::string> inputs;

  auto* simulate = app.add_subcommand("simulate", "Simulate plane-wave RF frames");
  fs::path sim_dir;
  simulate->add_option("out_dir", sim_dir, "Output directory")->required();

  auto* beamform = app.add_subcommand("beamform", "Beamform and compound RF frames");
  beamform->add_option("inputs", inputs, "PWRF files")->required()->check(CLI::ExistingFile);
  beamform->add_option("-o,--output", out, "Output PWIM")->required();

  auto* enhance = app.add_subcommand("enhance", "Ground-truth chain: compound and filter");
  enhance->add_option("inputs", inputs, "PWRF files")->required()->check(CLI::ExistingFile);
  enhance->add_option("-o,--output", out, "Output PWIM")->required();

  auto* infer = app.add_subcommand("infer", "Run the configured pipeline on one input");
  std::string infer_input;
  fs::path infer_dir;
  infer->add_option("input", infer_input, "PWRF, PWIM or PGM file")->required()->check(CLI::ExistingFile);
  infer->add_option("out_dir", infer_dir, "Output directory")->required();

  auto* train = app.add_subcommand("train-toy", "Train a toy model");
  std::string which;
  fs::path train_dir;
  train->add_option("model", which, "stage1 or cyclegan")->required();
  train->add_option("out_dir", train_dir, "Output directory")->required();

  auto* metric = app.add_subcommand("metrics", "Image-quality table for PWIM images");
  std::string reference, rois;
  metric->add_option("images", inputs, "PWIM files")->required()->check(CLI::ExistingFile);
  metric->add_option("-r,--reference", reference, "Ground-truth PWIM")->check(CLI::ExistingFile);
  metric->add_option("--rois", rois, "ROI file (default: standard phantom ROIs)")->check(CLI::ExistingFile);
  metric->add_option("-o,--output", out, "Output table (default: stdout)");

  auto* stat = app.add_subcommand("stats", "Reader-study analysis or power computation");
  std::string scores;
  bool power = false;
  stats::PowerQuery query;
  stat->add_option("scores", scores, "Score table")->check(CLI::ExistingFile);
  stat->add_option("-o,--output", out, "Output report (default: stdout)");
  stat->add_flag("--power", power, "Print the required sample size instead");
  stat->add_option("--effect-size", query.effect_size, "Cohen's f");
  stat->add_option("--alpha", query.alpha);
  stat->add_option("--target-power", query.power);
  stat->add_option("--groups", query.groups);

  auto* bench = app.add_subcommand("bench", "Frame-rate benchmark");
  std::vector<std::string> modes;
  bench->add_option("inputs", inputs, "PWRF frames to replay")->required()->check(CLI::ExistingFile);
  bench->add_option("-m,--modes", modes, "Modes to compare (default: the configured mode)")->delimiter(',');
  bench->add_option("-o,--output", out, "Output table (default: stdout)");

  auto* init = app.add_subcommand("init-model", "Write randomly initialised generator weights");
  int stage = 1;
  fs::path init_out;
  init->add_option("--stage", stage, "1 or 2")->check(CLI::IsMember({1, 2}));
  init->add_option("output", init_out, "Output PWNN")->required();

  auto* make_ref = app.add_subcommand("make-reference", "Write a histogram reference CDF");
  std::string from_image;
  fs::path ref_out;
  make_ref->add_option("--from-image", from_image, "Use this PWIM's CDF")->check(CLI::ExistingFile);
  make_ref->add_option("output", ref_out, "Output file")->required();

  auto* make_rois = app.add_subcommand("make-rois", "Write the standard phantom ROI file");
  std::size_t width = 512, height = 512;
  make_rois->add_option("--width", width);
  make_rois->add_option("--height", height);
  make_rois->add_option("output", ref_out, "Output file")->required();

  CLI11_PARSE(app, argc, argv);
  if (*seed_opt) g.seed = seed;
  if (g.single_thread) set_thread_count(1);

  try {
    if (*simulate) return run_simulate(g, sim_dir);
    if (*beamform) return run_beamform(g, inputs, out);
    if (*enhance) return run_enhance(g, inputs, out);
    if (*infer) return run_infer(g, infer_input, infer_dir);
    if (*train) return run_train(g, which, train_dir);
    if (*metric) return run_metrics(inputs, reference, rois, out);
    if (*stat) return run_stats(scores, out, power, query);
    if (*bench) return run_bench(g, inputs, modes, out);
    if (*init) return run_init_model(g, stage, init_out);
    if (*make_ref) return run_make_reference(from_image, ref_out);
    if (*make_rois) return run_make_rois(width, height, ref_out);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

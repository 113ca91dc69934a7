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

#include "pwe/pipeline/bench.hpp"

#include <chrono>
#include <cmath>
#include <condition_variable>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "pwe/beamform/das.hpp"

namespace pwe::pipeline {
namespace {

using Clock = std::chrono::steady_clock;

double ms_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

struct FrameRecord {
  double done_s = 0.0;  // completion time on the benchmark clock
  double latency_ms = 0.0;
  std::vector<StageTiming> timings;
};

// Collects per-frame records and turns them into a report once enough time has been measured.
class Recorder {
 public:
  explicit Recorder(const BenchSettings& s) : settings_(s) {}

  // Returns true once the measurement period is complete.
  bool add(FrameRecord r) {
    if (seen_++ < settings_.warmup_frames) {
      start_s_ = r.done_s;
      return false;
    }
    frames_.push_back(std::move(r));
    return frames_.back().done_s - start_s_ >= settings_.duration_s;
  }

  bool warmed_up() const { return seen_ > settings_.warmup_frames; }

  FrameRateReport finish(Mode mode) const {
    if (frames_.empty()) {
      throw InsufficientDataError("frame source exhausted after " + std::to_string(seen_) +
                                  " frames; warm-up needs " +
                                  std::to_string(settings_.warmup_frames) + " plus measured frames");
    }
    FrameRateReport r;
    r.mode = mode;
    r.frames_processed = frames_.size();
    r.measured_seconds = frames_.back().done_s - start_s_;
    r.windows = static_cast<std::size_t>(std::floor(r.measured_seconds / settings_.window_s));
    if (r.windows == 0) {
      r.mean_fps = static_cast<double>(frames_.size()) / std::max(r.measured_seconds, 1e-9);
    } else {
      std::vector<double> counts(r.windows, 0.0);
      for (const FrameRecord& f : frames_) {
        const auto w = static_cast<std::size_t>((f.done_s - start_s_) / settings_.window_s);
        if (w < r.windows) counts[w] += 1.0;
      }
      for (double& c : counts) c /= settings_.window_s;
      for (double c : counts) r.mean_fps += c;
      r.mean_fps /= static_cast<double>(r.windows);
      for (double c : counts) r.std_fps += (c - r.mean_fps) * (c - r.mean_fps);
      r.std_fps = std::sqrt(r.std_fps / static_cast<double>(r.windows));
    }
    std::vector<std::string> order;
    std::map<std::string, double> totals;
    for (const FrameRecord& f : frames_) {
      r.mean_frame_ms += f.latency_ms;
      for (const StageTiming& t : f.timings) {
        if (!totals.contains(t.stage)) order.push_back(t.stage);
        totals[t.stage] += t.milliseconds;
      }
    }
    const double n = static_cast<double>(frames_.size());
    r.mean_frame_ms /= n;
    double processing_ms = 0.0;
    for (const std::string& s : order) {
      r.breakdown.push_back({s, totals[s] / n});
      if (s != "beamform" && s != "display") processing_ms += totals[s] / n;
    }
    r.processing_fps = processing_ms > 0.0 ? 1000.0 / processing_ms : 0.0;
    return r;
  }

 private:
  BenchSettings settings_;
  std::size_t seen_ = 0;
  double start_s_ = 0.0;
  std::vector<FrameRecord> frames_;
};

FrameRateReport bench_serial(const Pipeline& pipeline, const FrameSource& source) {
  const BenchSettings& settings = pipeline.config().bench;
  Recorder recorder(settings);
  double clock_s = 0.0;  // busy time only, so untimed input formation does not count
  while (auto frame = source()) {
    FrameRecord rec;
    const auto t0 = Clock::now();
    PipelineOutput out;
    if (settings.include_beamforming) {
      out = pipeline.process(*frame);
    } else {
      const img::BModeImage input = pipeline.form_input(*frame);
      const auto t1 = Clock::now();
      out = pipeline.process(input);
      rec.latency_ms = ms_between(t1, Clock::now());
    }
    if (settings.include_beamforming) rec.latency_ms = ms_between(t0, Clock::now());
    clock_s += rec.latency_ms / 1000.0;
    rec.done_s = clock_s;
    rec.timings = std::move(out.timings);
    if (recorder.add(std::move(rec))) break;
  }
  FrameRateReport report = recorder.finish(pipeline.config().mode);
  report.includes_beamforming = settings.include_beamforming;
  return report;
}

struct Formed {
  std::size_t index;
  img::BModeImage input;
  double beamform_ms, display_ms;
};

// Beamforming of frame n + 1 overlaps post-processing of frame n through a bounded FIFO.
FrameRateReport bench_pipelined(const Pipeline& pipeline, const FrameSource& source) {
  const PipelineConfig& config = pipeline.config();
  Recorder recorder(config.bench);
  std::mutex mutex;
  std::condition_variable cv;
  std::deque<Formed> queue;
  bool producer_done = false, stop = false;
  constexpr std::size_t kCapacity = 2;

  std::exception_ptr producer_error;
  std::thread producer([&] {
    try {
      std::size_t index = 0;
      while (true) {
        {
          std::unique_lock lock(mutex);
          cv.wait(lock, [&] { return stop || queue.size() < kCapacity; });
          if (stop) break;
        }
        auto frame = source();
        if (!frame) break;
        const auto t0 = Clock::now();
        const bf::ComplexImage beamformed =
            bf::das_beamform(*frame, config.enhance.grid, config.enhance.f_number);
        const auto t1 = Clock::now();
        img::BModeImage input =
            img::form_display_image(beamformed, config.enhance, img::StageTag::plane_wave_input);
        Formed f{index++, std::move(input), ms_between(t0, t1), ms_between(t1, Clock::now())};
        std::lock_guard lock(mutex);
        queue.push_back(std::move(f));
        cv.notify_all();
      }
    } catch (...) {
      producer_error = std::current_exception();
    }
    std::lock_guard lock(mutex);
    producer_done = true;
    cv.notify_all();
  });

  const auto origin = Clock::now();
  std::size_t expected = 0;
  std::exception_ptr consumer_error;
  try {
    while (true) {
      Formed f;
      {
        std::unique_lock lock(mutex);
        cv.wait(lock, [&] { return !queue.empty() || producer_done; });
        if (queue.empty()) break;
        f = std::move(queue.front());
        queue.pop_front();
        cv.notify_all();
      }
      if (f.index != expected++) throw std::logic_error("benchmark queue reordered frames");
      const auto t0 = Clock::now();
      PipelineOutput out = pipeline.process(f.input);
      const auto t1 = Clock::now();
      FrameRecord rec;
      rec.done_s = std::chrono::duration<double>(t1 - origin).count();
      rec.latency_ms = f.beamform_ms + f.display_ms + ms_between(t0, t1);
      rec.timings = {{"beamform", f.beamform_ms}, {"display", f.display_ms}};
      rec.timings.insert(rec.timings.end(), out.timings.begin(), out.timings.end());
      if (recorder.add(std::move(rec))) break;
    }
  } catch (...) {
    consumer_error = std::current_exception();
  }
  {
    std::lock_guard lock(mutex);
    stop = true;
    cv.notify_all();
  }
  producer.join();
  if (consumer_error) std::rethrow_exception(consumer_error);
  if (producer_error) std::rethrow_exception(producer_error);
  FrameRateReport report = recorder.finish(config.mode);
  report.pipelined = true;
  return report;
}

}  // namespace

FrameSource replay_source(std::vector<acq::RFFrame> frames, std::size_t max_frames) {
  if (frames.empty()) throw std::invalid_argument("replay_source: no frames");
  auto state = std::make_shared<std::pair<std::vector<acq::RFFrame>, std::size_t>>(
      std::move(frames), 0);
  return [state, max_frames]() -> std::optional<acq::RFFrame> {
    auto& [list, served] = *state;
    if (max_frames != 0 && served >= max_frames) return std::nullopt;
    return list[served++ % list.size()];
  };
}

FrameRateReport bench_fps(const Pipeline& pipeline, const FrameSource& source) {
  const PipelineConfig& config = pipeline.config();
  if (config.single_thread || !config.bench.include_beamforming) {
    return bench_serial(pipeline, source);
  }
  return bench_pipelined(pipeline, source);
}

}  // namespace pwe::pipeline

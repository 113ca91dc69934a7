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

#include "pwe/acq/rf_io.hpp"

#include <fstream>
#include <string>
#include <vector>

#include "pwe/common/binary_io.hpp"
#include "pwe/common/error.hpp"

namespace pwe::acq {

void write_rf(std::ostream& out, const RFFrame& frame) {
  frame.validate();
  BinaryWriter w(out);
  w.write_magic("PWRF");
  w.write_u32(kRfFormatVersion);
  w.write_u32(frame.geometry.element_count);
  w.write_u32(static_cast<std::uint32_t>(frame.sample_count));
  w.write_f64(frame.geometry.pitch);
  w.write_f64(frame.geometry.center_frequency);
  w.write_f64(frame.geometry.sampling_frequency);
  w.write_f64(frame.geometry.sound_speed);
  w.write_f64(frame.steer_angle);
  w.write_f64(frame.t0);
  std::vector<float> row(frame.sample_count);
  for (std::size_t e = 0; e < frame.geometry.element_count; ++e) {
    auto ch = frame.channel(e);
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = static_cast<float>(ch[i]);
    w.write_f32_array(row);
  }
}

RFFrame read_rf(std::istream& in) {
  BinaryReader r(in, "PWRF");
  r.expect_magic("PWRF");
  r.expect_version(kRfFormatVersion);
  RFFrame frame;
  frame.geometry.element_count = r.read_u32("element_count");
  frame.sample_count = r.read_u32("sample_count");
  frame.geometry.pitch = r.read_f64("pitch");
  frame.geometry.center_frequency = r.read_f64("center_frequency");
  frame.geometry.sampling_frequency = r.read_f64("sampling_frequency");
  frame.geometry.sound_speed = r.read_f64("sound_speed");
  frame.steer_angle = r.read_f64("steer_angle");
  frame.t0 = r.read_f64("t0");
  try {
    frame.geometry.validate();
  } catch (const std::invalid_argument& e) {
    r.fail(std::string("invalid header: ") + e.what());
  }

  frame.samples.resize(static_cast<std::size_t>(frame.geometry.element_count) * frame.sample_count);
  std::vector<float> row(frame.sample_count);
  for (std::size_t e = 0; e < frame.geometry.element_count; ++e) {
    try {
      r.read_f32_array(row, "samples");
    } catch (const FormatError&) {
      r.fail("truncated samples: header declares " + std::to_string(frame.geometry.element_count) +
             " element rows of " + std::to_string(frame.sample_count) + " samples, data ends in row " +
             std::to_string(e));
    }
    auto ch = frame.channel(e);
    for (std::size_t i = 0; i < row.size(); ++i) ch[i] = row[i];
  }
  return frame;
}

void save_rf(const RFFrame& frame, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_rf(out, frame);
}

RFFrame load_rf(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_rf(in);
}

void quantize_to_file_precision(RFFrame& frame) {
  for (double& v : frame.samples) v = static_cast<float>(v);
}

}  // namespace pwe::acq

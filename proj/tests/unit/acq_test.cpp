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
#include <cstring>
#include <sstream>

#include "pwe/acq/phantoms.hpp"
#include "pwe/acq/rf_io.hpp"
#include "pwe/acq/simulate.hpp"
#include "pwe/common/error.hpp"

namespace pwe::acq {
namespace {

std::size_t argmax_abs(std::span<const double> v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  }
  return best;
}

TEST(SimulateRf, CenterElementPeakAtTwoWayTravelTime) {
  TransducerGeometry geo;
  const RFFrame f = simulate_rf(geo, point_target(0.0, 0.020), 0.0);
  const std::size_t center = geo.element_count / 2;
  const double t_peak = f.sample_time(argmax_abs(f.channel(center)));
  const double expected = 2.0 * 0.020 / 1540.0;  // 25.97 us
  EXPECT_NEAR(expected, 25.97e-6, 0.01e-6);
  const double pulse_width = geo.pulse_cycles / geo.center_frequency;
  EXPECT_LT(std::abs(t_peak - expected), pulse_width);
}

TEST(SimulateRf, EmptyFieldIsSilent) {
  const RFFrame f = simulate_rf(TransducerGeometry{}, ScattererField{}, 0.0);
  for (double v : f.samples) ASSERT_EQ(v, 0.0);
  EXPECT_EQ(f.samples.size(), 128u * f.sample_count);
}

TEST(SimulateRf, SuperpositionOverScatterers) {
  TransducerGeometry geo;
  SpeckleSpec spec;
  spec.density = 2.0e5;
  const ScattererField a = speckle_phantom(spec, 1);
  const ScattererField b = speckle_phantom(spec, 2);
  for (double angle : {-0.05, 0.0, 0.05}) {
    const RFFrame fa = simulate_rf(geo, a, angle);
    const RFFrame fb = simulate_rf(geo, b, angle);
    const RFFrame fab = simulate_rf(geo, ScattererField::merge(a, b), angle);
    double peak = 0.0;
    for (double v : fab.samples) peak = std::max(peak, std::abs(v));
    ASSERT_GT(peak, 0.0);
    for (std::size_t i = 0; i < fab.samples.size(); ++i) {
      ASSERT_LE(std::abs(fab.samples[i] - (fa.samples[i] + fb.samples[i])), 1e-12 * peak);
    }
  }
}

TEST(SimulateRf, AxialShiftDelaysEchoByTwoWayTime) {
  TransducerGeometry geo;
  const std::size_t e = 40;
  const double x = geo.element_x(e);
  const int shift_samples = 7;
  const double dz = shift_samples * geo.sound_speed / (2.0 * geo.sampling_frequency);
  const RFFrame near = simulate_rf(geo, point_target(x, 0.015), 0.0);
  const RFFrame far = simulate_rf(geo, point_target(x, 0.015 + dz), 0.0);
  auto a = near.channel(e);
  auto b = far.channel(e);
  double peak = 0.0;
  for (double v : a) peak = std::max(peak, std::abs(v));
  for (std::size_t i = shift_samples; i < b.size(); ++i) {
    ASSERT_NEAR(b[i], a[i - shift_samples], 1e-9 * peak) << "sample " << i;
  }
}

TEST(SimulateRf, RejectsInvalidInputs) {
  TransducerGeometry geo;
  EXPECT_THROW(simulate_rf(geo, point_target(0.0, 0.0), 0.0), std::invalid_argument);
  EXPECT_THROW(simulate_rf(geo, point_target(0.0, -0.01), 0.0), std::invalid_argument);
  EXPECT_THROW(simulate_rf(geo, point_target(0.0, 0.01), degrees_to_radians(30.0)),
               std::invalid_argument);
  TransducerGeometry empty = geo;
  empty.element_count = 0;
  EXPECT_THROW(simulate_rf(empty, point_target(0.0, 0.01), 0.0), std::invalid_argument);
  TransducerGeometry undersampled = geo;
  undersampled.sampling_frequency = 3.0 * geo.center_frequency;
  EXPECT_THROW(undersampled.validate(), std::invalid_argument);
  ScattererField ragged = point_target(0.0, 0.01);
  ragged.reflectivities.push_back(1.0);
  EXPECT_THROW(simulate_rf(geo, ragged, 0.0), std::invalid_argument);
}

TEST(SimulateRf, NoiseIsSeeded) {
  SimulationOptions opt;
  opt.noise_sigma = 0.1;
  opt.noise_seed = 9;
  const auto a = simulate_rf(TransducerGeometry{}, point_target(0.0, 0.02), 0.0, opt);
  const auto b = simulate_rf(TransducerGeometry{}, point_target(0.0, 0.02), 0.0, opt);
  EXPECT_EQ(a.samples, b.samples);
  opt.noise_seed = 10;
  const auto c = simulate_rf(TransducerGeometry{}, point_target(0.0, 0.02), 0.0, opt);
  EXPECT_NE(a.samples, c.samples);
}

TEST(AcquireSequence, TwelveTransmitsAngleMajor) {
  SimulationOptions opt;
  opt.noise_sigma = 0.01;
  opt.noise_seed = 3;
  const auto frames = acquire_sequence(TransducerGeometry{}, point_target(0.0, 0.02),
                                       PlaneWaveSequence{}, opt);
  ASSERT_EQ(frames.size(), 12u);
  EXPECT_DOUBLE_EQ(frames[0].steer_angle, degrees_to_radians(-3.0));
  EXPECT_DOUBLE_EQ(frames[4].steer_angle, 0.0);
  EXPECT_DOUBLE_EQ(frames[11].steer_angle, degrees_to_radians(3.0));
  EXPECT_NE(frames[4].samples, frames[5].samples);  // independent noise per repeat
}

RFFrame small_frame() {
  TransducerGeometry geo;
  SimulationOptions opt;
  opt.sample_count = 300;
  opt.t0 = 1.0e-5;
  opt.noise_sigma = 0.05;
  opt.noise_seed = 4;
  RFFrame f = simulate_rf(geo, point_target(0.001, 0.009), 0.02, opt);
  quantize_to_file_precision(f);
  return f;
}

TEST(RfIo, RoundTripIsBitExact) {
  const RFFrame f = small_frame();
  std::stringstream ss;
  write_rf(ss, f);
  const RFFrame g = read_rf(ss);
  EXPECT_EQ(g.geometry, f.geometry);
  EXPECT_EQ(g.sample_count, f.sample_count);
  EXPECT_EQ(g.steer_angle, f.steer_angle);
  EXPECT_EQ(g.t0, f.t0);
  ASSERT_EQ(g.samples.size(), f.samples.size());
  EXPECT_EQ(0, std::memcmp(g.samples.data(), f.samples.data(), f.samples.size() * sizeof(double)));

  std::stringstream again;
  write_rf(again, g);
  EXPECT_EQ(again.str(), ss.str());
}

TEST(RfIo, HeaderLayout) {
  std::stringstream ss;
  write_rf(ss, small_frame());
  const std::string bytes = ss.str();
  EXPECT_EQ(bytes.substr(0, 4), "PWRF");
  EXPECT_EQ(bytes.size(), 4u + 3 * 4 + 6 * 8 + 128u * 300 * 4);
  std::uint32_t version, elements, samples;
  std::memcpy(&version, bytes.data() + 4, 4);
  std::memcpy(&elements, bytes.data() + 8, 4);
  std::memcpy(&samples, bytes.data() + 12, 4);
  EXPECT_EQ(version, 1u);
  EXPECT_EQ(elements, 128u);
  EXPECT_EQ(samples, 300u);
  double t0;
  std::memcpy(&t0, bytes.data() + 16 + 5 * 8, 8);
  EXPECT_EQ(t0, 1.0e-5);
}

TEST(RfIo, WrongMagicIsFormatError) {
  std::stringstream ss;
  write_rf(ss, small_frame());
  std::string bytes = ss.str();
  bytes[0] = 'X';
  std::stringstream bad(bytes);
  try {
    read_rf(bad);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("magic"), std::string::npos);
  }
}

TEST(RfIo, WrongVersionIsFormatError) {
  std::stringstream ss;
  write_rf(ss, small_frame());
  std::string bytes = ss.str();
  bytes[4] = 2;
  std::stringstream bad(bytes);
  try {
    read_rf(bad);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("version"), std::string::npos);
  }
}

TEST(RfIo, MissingRowIsTruncationError) {
  std::stringstream ss;
  write_rf(ss, small_frame());
  std::string bytes = ss.str();
  bytes.resize(bytes.size() - 300 * 4);  // 127 of 128 rows
  std::stringstream bad(bytes);
  try {
    read_rf(bad);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("truncated samples"), std::string::npos) << msg;
    EXPECT_NE(msg.find("128"), std::string::npos) << msg;
  }
}

TEST(RfIo, TruncatedHeaderNamesField) {
  std::stringstream ss;
  write_rf(ss, small_frame());
  std::stringstream bad(ss.str().substr(0, 20));
  try {
    read_rf(bad);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("pitch"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace pwe::acq

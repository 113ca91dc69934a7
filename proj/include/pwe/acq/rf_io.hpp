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
#include <iosfwd>

#include "pwe/acq/transducer.hpp"

namespace pwe::acq {

/// PWRF layout (little-endian):
///   "PWRF" | u32 version=1 | u32 element_count | u32 sample_count |
///   f64 pitch | f64 center_frequency | f64 sampling_frequency | f64 sound_speed |
///   f64 steer_angle | f64 t0 | f32 samples[element_count][sample_count]
///
/// Samples are stored as f32 and pulse_cycles is not part of the header (loaded frames carry
/// the default). Round trips are bit-exact for frames whose samples are f32-representable.
inline constexpr std::uint32_t kRfFormatVersion = 1;

void write_rf(std::ostream& out, const RFFrame& frame);
RFFrame read_rf(std::istream& in);

void save_rf(const RFFrame& frame, const std::filesystem::path& path);
RFFrame load_rf(const std::filesystem::path& path);

/// Rounds samples to f32 precision, i.e. what a save/load cycle yields.
void quantize_to_file_precision(RFFrame& frame);

}  // namespace pwe::acq

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

#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace pwe {

static_assert(std::endian::native == std::endian::little,
              "binary formats are little-endian and read/written natively");

class BinaryWriter {
 public:
  explicit BinaryWriter(std::ostream& out) : out_(out) {}

  void write_magic(std::string_view magic);
  void write_u8(std::uint8_t v) { write_raw(&v, sizeof v); }
  void write_u16(std::uint16_t v) { write_raw(&v, sizeof v); }
  void write_u32(std::uint32_t v) { write_raw(&v, sizeof v); }
  void write_f32(float v) { write_raw(&v, sizeof v); }
  void write_f64(double v) { write_raw(&v, sizeof v); }
  void write_f32_array(std::span<const float> values);
  void write_raw(const void* data, std::size_t bytes);

 private:
  std::ostream& out_;
};

/// Reads little-endian fields; every failure raises FormatError naming the format and field.
class BinaryReader {
 public:
  BinaryReader(std::istream& in, std::string format) : in_(in), format_(std::move(format)) {}

  void expect_magic(std::string_view magic);
  std::uint32_t expect_version(std::uint32_t supported);
  std::uint8_t read_u8(std::string_view field);
  std::uint16_t read_u16(std::string_view field);
  std::uint32_t read_u32(std::string_view field);
  float read_f32(std::string_view field);
  double read_f64(std::string_view field);
  void read_f32_array(std::span<float> out, std::string_view field);
  std::string read_string(std::size_t length, std::string_view field);
  bool at_end();

  [[noreturn]] void fail(std::string_view message) const;

 private:
  void read_raw(void* data, std::size_t bytes, std::string_view field);

  std::istream& in_;
  std::string format_;
};

}  // namespace pwe

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

#include "pwe/common/binary_io.hpp"

#include "pwe/common/error.hpp"

namespace pwe {

void BinaryWriter::write_magic(std::string_view magic) { write_raw(magic.data(), magic.size()); }

void BinaryWriter::write_f32_array(std::span<const float> values) {
  write_raw(values.data(), values.size_bytes());
}

void BinaryWriter::write_raw(const void* data, std::size_t bytes) {
  out_.write(static_cast<const char*>(data), static_cast<std::streamsize>(bytes));
  if (!out_) throw std::runtime_error("write failed");
}

void BinaryReader::fail(std::string_view message) const {
  throw FormatError(format_ + ": " + std::string(message));
}

void BinaryReader::read_raw(void* data, std::size_t bytes, std::string_view field) {
  in_.read(static_cast<char*>(data), static_cast<std::streamsize>(bytes));
  if (static_cast<std::size_t>(in_.gcount()) != bytes) {
    fail("truncated while reading " + std::string(field));
  }
}

void BinaryReader::expect_magic(std::string_view magic) {
  std::string got(magic.size(), '\0');
  read_raw(got.data(), got.size(), "magic");
  if (got != magic) fail("bad magic (expected \"" + std::string(magic) + "\")");
}

std::uint32_t BinaryReader::expect_version(std::uint32_t supported) {
  const std::uint32_t v = read_u32("version");
  if (v != supported) {
    fail("unsupported version " + std::to_string(v) + " (expected " + std::to_string(supported) +
         ")");
  }
  return v;
}

std::uint8_t BinaryReader::read_u8(std::string_view field) {
  std::uint8_t v;
  read_raw(&v, sizeof v, field);
  return v;
}

std::uint16_t BinaryReader::read_u16(std::string_view field) {
  std::uint16_t v;
  read_raw(&v, sizeof v, field);
  return v;
}

std::uint32_t BinaryReader::read_u32(std::string_view field) {
  std::uint32_t v;
  read_raw(&v, sizeof v, field);
  return v;
}

float BinaryReader::read_f32(std::string_view field) {
  float v;
  read_raw(&v, sizeof v, field);
  return v;
}

double BinaryReader::read_f64(std::string_view field) {
  double v;
  read_raw(&v, sizeof v, field);
  return v;
}

void BinaryReader::read_f32_array(std::span<float> out, std::string_view field) {
  read_raw(out.data(), out.size_bytes(), field);
}

std::string BinaryReader::read_string(std::size_t length, std::string_view field) {
  std::string s(length, '\0');
  read_raw(s.data(), length, field);
  return s;
}

bool BinaryReader::at_end() { return in_.peek() == std::char_traits<char>::eof(); }

}  // namespace pwe

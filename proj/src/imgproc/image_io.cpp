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

#include "pwe/imgproc/image_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pwe/common/binary_io.hpp"
#include "pwe/common/error.hpp"

namespace pwe::img {

void write_pwim(std::ostream& out, const BModeImage& image) {
  image.validate();
  BinaryWriter w(out);
  w.write_magic("PWIM");
  w.write_u32(kImageFormatVersion);
  w.write_u32(static_cast<std::uint32_t>(image.width()));
  w.write_u32(static_cast<std::uint32_t>(image.height()));
  w.write_f64(image.grid.lateral_min);
  w.write_f64(image.grid.lateral_max);
  w.write_f64(image.grid.axial_min);
  w.write_f64(image.grid.axial_max);
  w.write_u8(static_cast<std::uint8_t>(image.tag));
  std::vector<float> row(image.width());
  for (std::size_t r = 0; r < image.height(); ++r) {
    for (std::size_t c = 0; c < row.size(); ++c) row[c] = static_cast<float>(image.pixels.at(r, c));
    w.write_f32_array(row);
  }
}

BModeImage read_pwim(std::istream& in) {
  BinaryReader r(in, "PWIM");
  r.expect_magic("PWIM");
  r.expect_version(kImageFormatVersion);
  bf::PixelGrid grid;
  grid.width = r.read_u32("width");
  grid.height = r.read_u32("height");
  grid.lateral_min = r.read_f64("lateral_min");
  grid.lateral_max = r.read_f64("lateral_max");
  grid.axial_min = r.read_f64("axial_min");
  grid.axial_max = r.read_f64("axial_max");
  try {
    grid.validate();
  } catch (const std::invalid_argument& e) {
    r.fail(std::string("invalid header: ") + e.what());
  }
  const std::uint8_t tag = r.read_u8("stage_tag");
  if (tag > static_cast<std::uint8_t>(StageTag::histogram_matched)) {
    r.fail("unknown stage_tag " + std::to_string(tag));
  }
  Image pixels(grid.width, grid.height);
  std::vector<float> row(grid.width);
  for (std::size_t y = 0; y < grid.height; ++y) {
    r.read_f32_array(row, "pixels");
    for (std::size_t x = 0; x < grid.width; ++x) pixels.at(y, x) = row[x];
  }
  try {
    return BModeImage(std::move(pixels), grid, static_cast<StageTag>(tag));
  } catch (const std::invalid_argument& e) {
    r.fail(e.what());
  }
}

void save_pwim(const BModeImage& image, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_pwim(out, image);
}

BModeImage load_pwim(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_pwim(in);
}

void save_pgm(const Image& image, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << "P5\n" << image.width() << " " << image.height() << "\n255\n";
  std::vector<unsigned char> bytes(image.size());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const double v = std::clamp(image.data()[i], 0.0, 1.0);
    bytes[i] = static_cast<unsigned char>(std::lround(v * 255.0));
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

Image load_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string magic;
  std::size_t w = 0, h = 0;
  int maxval = 0;
  in >> magic >> w >> h >> maxval;
  if (magic != "P5") throw FormatError("PGM: bad magic");
  if (!in || w == 0 || h == 0) throw FormatError("PGM: bad dimensions");
  if (maxval <= 0 || maxval > 255) throw FormatError("PGM: unsupported maxval");
  in.get();
  std::vector<unsigned char> bytes(w * h);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (static_cast<std::size_t>(in.gcount()) != bytes.size()) throw FormatError("PGM: truncated pixels");
  Image out(w, h);
  for (std::size_t i = 0; i < bytes.size(); ++i) out.data()[i] = bytes[i] / static_cast<double>(maxval);
  return out;
}

void quantize_to_file_precision(Image& image) {
  for (double& v : image.data()) v = static_cast<float>(v);
}

}  // namespace pwe::img

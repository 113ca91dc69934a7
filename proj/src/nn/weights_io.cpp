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

#include "pwe/nn/weights_io.hpp"

#include <fstream>
#include <limits>
#include <stdexcept>

#include "pwe/common/binary_io.hpp"
#include "pwe/common/error.hpp"

namespace pwe::nn {
namespace {

constexpr std::uint32_t kVersion = 1;

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

}  // namespace

void write_tensor_file(std::ostream& out, std::string_view magic, const NamedTensors& tensors) {
  BinaryWriter w(out);
  w.write_magic(magic);
  w.write_u32(kVersion);
  w.write_u32(static_cast<std::uint32_t>(tensors.size()));
  for (const auto& [name, t] : tensors) {
    if (name.empty() || name.size() > std::numeric_limits<std::uint16_t>::max()) {
      throw std::invalid_argument("tensor file: invalid tensor name length");
    }
    if (t.rank() > std::numeric_limits<std::uint8_t>::max()) {
      throw std::invalid_argument("tensor file: rank too large for '" + name + "'");
    }
    w.write_u16(static_cast<std::uint16_t>(name.size()));
    w.write_raw(name.data(), name.size());
    w.write_u8(static_cast<std::uint8_t>(t.rank()));
    for (std::size_t d : t.shape()) w.write_u32(static_cast<std::uint32_t>(d));
    w.write_f32_array(t.values());
  }
  if (!out) throw std::runtime_error("tensor file: write failed");
}

NamedTensors read_tensor_file(std::istream& in, std::string_view magic) {
  BinaryReader r(in, std::string(magic));
  r.expect_magic(magic);
  r.expect_version(kVersion);
  const std::uint32_t count = r.read_u32("tensor count");
  NamedTensors out;
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint16_t len = r.read_u16("tensor name length");
    if (len == 0) r.fail("empty tensor name");
    std::string name = r.read_string(len, "tensor name");
    const std::uint8_t rank = r.read_u8("rank of " + name);
    Shape shape(rank);
    std::uint64_t total = 1;
    for (auto& d : shape) {
      d = r.read_u32("dims of " + name);
      total *= d;
      if (total > (std::uint64_t{1} << 28)) r.fail("tensor '" + name + "' is implausibly large");
    }
    Tensor t(shape);
    r.read_f32_array(t.values(), "data of " + name);
    for (const auto& [existing, unused] : out) {
      if (existing == name) r.fail("duplicate tensor '" + name + "'");
    }
    out.emplace_back(std::move(name), std::move(t));
  }
  if (!r.at_end()) r.fail("trailing bytes after last tensor");
  return out;
}

void save_weights(const WeightStore<float>& weights, const std::filesystem::path& path) {
  NamedTensors list(weights.begin(), weights.end());
  auto out = open_out(path);
  write_tensor_file(out, kWeightsMagic, list);
}

WeightStore<float> load_weights(const std::filesystem::path& path) {
  auto in = open_in(path);
  WeightStore<float> store;
  for (auto& [name, t] : read_tensor_file(in, kWeightsMagic)) store.emplace(name, std::move(t));
  return store;
}

BoundWeights load_weights_for(const GraphSpec& graph, const std::filesystem::path& path) {
  BoundWeights b{load_weights(path), {}};
  try {
    b.unused = check_weights(graph, b.weights);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return b;
}

ReferenceActivations capture_activations(const ModelGraph& model, const Tensor& input) {
  ReferenceActivations ref{input, {}};
  auto outs = forward_all(model.graph, model.weights, input);
  for (std::size_t i = 0; i < outs.size(); ++i) {
    ref.layers.emplace_back(model.graph.layers[i].name, std::move(outs[i]));
  }
  return ref;
}

void save_reference_activations(const ReferenceActivations& ref, const std::filesystem::path& path) {
  NamedTensors list;
  list.emplace_back(std::string(kGraphInput), ref.input);
  list.insert(list.end(), ref.layers.begin(), ref.layers.end());
  auto out = open_out(path);
  write_tensor_file(out, kActivationsMagic, list);
}

ReferenceActivations load_reference_activations(const std::filesystem::path& path) {
  auto in = open_in(path);
  NamedTensors list = read_tensor_file(in, kActivationsMagic);
  if (list.empty() || list.front().first != kGraphInput) {
    throw FormatError(path.string() + ": reference activations must start with the 'input' tensor");
  }
  ReferenceActivations ref{std::move(list.front().second), {}};
  ref.layers.assign(std::make_move_iterator(list.begin() + 1), std::make_move_iterator(list.end()));
  return ref;
}

}  // namespace pwe::nn

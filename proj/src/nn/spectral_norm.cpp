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

#include "pwe/nn/spectral_norm.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace pwe::nn {
namespace {

double start_component(std::size_t i) {
  std::uint64_t z = 0x9E3779B97F4A7C15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return 0.5 + static_cast<double>(z >> 11) * 0x1.0p-53;
}

double normalize(std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  s = std::sqrt(s);
  if (s > 0.0) {
    for (double& x : v) x /= s;
  }
  return s;
}

}  // namespace

template <class T>
SingularEstimate estimate_spectral_norm(const BasicTensor<T>& w, std::size_t iterations) {
  if (iterations == 0) throw std::invalid_argument("spectral_normalize: iterations must be >= 1");
  if (w.rank() < 2) {
    throw std::invalid_argument("spectral_normalize: kernel must have rank >= 2, got " +
                                shape_string(w.shape()));
  }
  const std::size_t rows = w.shape().back();
  const std::size_t cols = w.size() / rows;
  bool nonzero = false;
  for (T x : w.values()) nonzero = nonzero || x != T(0);
  if (!nonzero) throw std::invalid_argument("spectral_normalize: zero weight matrix");

  // M[o][r] = w[r * rows + o]
  SingularEstimate e;
  e.u.resize(rows);
  e.v.assign(cols, 0.0);
  for (std::size_t o = 0; o < rows; ++o) e.u[o] = start_component(o);
  normalize(e.u);
  std::vector<double> mv(rows);
  for (std::size_t it = 0; it < iterations; ++it) {
    for (std::size_t r = 0; r < cols; ++r) {
      double s = 0.0;
      for (std::size_t o = 0; o < rows; ++o) s += static_cast<double>(w[r * rows + o]) * e.u[o];
      e.v[r] = s;
    }
    if (normalize(e.v) == 0.0) break;
    for (std::size_t o = 0; o < rows; ++o) mv[o] = 0.0;
    for (std::size_t r = 0; r < cols; ++r) {
      for (std::size_t o = 0; o < rows; ++o) mv[o] += static_cast<double>(w[r * rows + o]) * e.v[r];
    }
    e.u = mv;
    e.sigma = normalize(e.u);
  }
  if (!(e.sigma > 0.0)) {
    throw std::invalid_argument("spectral_normalize: start vector orthogonal to the row space");
  }
  return e;
}

template <class T>
SpectralNormResult<T> spectral_normalize(const BasicTensor<T>& w, std::size_t iterations) {
  SpectralNormResult<T> r{w, estimate_spectral_norm(w, iterations)};
  for (T& x : r.normalized.values()) x = static_cast<T>(x / r.estimate.sigma);
  return r;
}

template SingularEstimate estimate_spectral_norm(const BasicTensor<float>&, std::size_t);
template SingularEstimate estimate_spectral_norm(const BasicTensor<double>&, std::size_t);
template SpectralNormResult<float> spectral_normalize(const BasicTensor<float>&, std::size_t);
template SpectralNormResult<double> spectral_normalize(const BasicTensor<double>&, std::size_t);

}  // namespace pwe::nn

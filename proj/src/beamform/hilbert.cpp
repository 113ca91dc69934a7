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

#include "pwe/beamform/hilbert.hpp"

#include <fftw3.h>

#include <memory>
#include <mutex>

#include "pwe/common/parallel.hpp"

namespace pwe::bf {

namespace {

// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex g_plan_mutex;

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
  explicit PlanPair(int n) {
    FftwBuffer tmp(fftw_alloc_complex(static_cast<std::size_t>(n)));
    std::lock_guard lock(g_plan_mutex);
    forward = fftw_plan_dft_1d(n, tmp.get(), tmp.get(), FFTW_FORWARD, FFTW_ESTIMATE);
    inverse = fftw_plan_dft_1d(n, tmp.get(), tmp.get(), FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~PlanPair() {
    std::lock_guard lock(g_plan_mutex);
    fftw_destroy_plan(forward);
    fftw_destroy_plan(inverse);
  }
  PlanPair(const PlanPair&) = delete;
  PlanPair& operator=(const PlanPair&) = delete;
};

void analytic_into(const PlanPair& plans, std::span<const double> in, fftw_complex* buf,
                   std::complex<double>* out) {
  const std::size_t n = in.size();
  for (std::size_t i = 0; i < n; ++i) {
    buf[i][0] = in[i];
    buf[i][1] = 0.0;
  }
  fftw_execute_dft(plans.forward, buf, buf);
  const std::size_t half = n / 2;
  // Positive frequencies 1 .. ceil(n/2)-1 doubled, Nyquist (even n) kept, negatives zeroed.
  for (std::size_t k = 1; k < n; ++k) {
    double scale;
    if (n % 2 == 0) {
      scale = (k < half) ? 2.0 : (k == half ? 1.0 : 0.0);
    } else {
      scale = (k <= half) ? 2.0 : 0.0;
    }
    buf[k][0] *= scale;
    buf[k][1] *= scale;
  }
  fftw_execute_dft(plans.inverse, buf, buf);
  const double inv = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {buf[i][0] * inv, buf[i][1] * inv};
}

}  // namespace

std::vector<std::complex<double>> analytic_signal(std::span<const double> signal) {
  std::vector<std::complex<double>> out(signal.size());
  if (signal.empty()) return out;
  PlanPair plans(static_cast<int>(signal.size()));
  FftwBuffer buf(fftw_alloc_complex(signal.size()));
  analytic_into(plans, signal, buf.get(), out.data());
  return out;
}

std::vector<std::complex<double>> analytic_channels(const acq::RFFrame& frame) {
  const std::size_t n = frame.sample_count;
  std::vector<std::complex<double>> out(frame.samples.size());
  if (n == 0) return out;
  PlanPair plans(static_cast<int>(n));
  parallel_for(0, frame.geometry.element_count, [&](std::size_t first, std::size_t last) {
    FftwBuffer buf(fftw_alloc_complex(n));
    for (std::size_t e = first; e < last; ++e) {
      analytic_into(plans, frame.channel(e), buf.get(), out.data() + e * n);
    }
  });
  return out;
}

}  // namespace pwe::bf

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

#include <complex>
#include <span>
#include <vector>

#include "pwe/acq/transducer.hpp"

namespace pwe::bf {

/// Discrete analytic signal: the DFT is kept at DC (and Nyquist for even lengths), doubled at
/// positive frequencies and zeroed at negative ones. The real part reproduces the input.
std::vector<std::complex<double>> analytic_signal(std::span<const double> signal);

/// Analytic signal of every channel, element-major like RFFrame::samples.
std::vector<std::complex<double>> analytic_channels(const acq::RFFrame& frame);

}  // namespace pwe::bf

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

#include "pwe/acq/transducer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pwe::acq {

void TransducerGeometry::validate() const {
  if (element_count < 2) throw std::invalid_argument("geometry: element_count must be >= 2");
  if (!(pitch > 0.0)) throw std::invalid_argument("geometry: pitch must be positive");
  if (!(center_frequency > 0.0)) {
    throw std::invalid_argument("geometry: center_frequency must be positive");
  }
  if (!(sampling_frequency >= 4.0 * center_frequency)) {
    throw std::invalid_argument("geometry: sampling_frequency must be >= 4 x center_frequency");
  }
  if (!(sound_speed > 0.0)) throw std::invalid_argument("geometry: sound_speed must be positive");
  if (!(pulse_cycles > 0.0)) throw std::invalid_argument("geometry: pulse_cycles must be positive");
}

void ScattererField::validate() const {
  if (positions.size() != reflectivities.size()) {
    throw std::invalid_argument("scatterer field: " + std::to_string(positions.size()) +
                                " positions but " + std::to_string(reflectivities.size()) +
                                " reflectivities");
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (!(positions[i].axial > 0.0)) {
      throw std::invalid_argument("scatterer " + std::to_string(i) +
                                  " is not in front of the array (axial <= 0)");
    }
    if (!std::isfinite(positions[i].lateral) || !std::isfinite(reflectivities[i])) {
      throw std::invalid_argument("scatterer " + std::to_string(i) + " is not finite");
    }
  }
}

ScattererField ScattererField::merge(const ScattererField& a, const ScattererField& b) {
  ScattererField out = a;
  out.positions.insert(out.positions.end(), b.positions.begin(), b.positions.end());
  out.reflectivities.insert(out.reflectivities.end(), b.reflectivities.begin(),
                            b.reflectivities.end());
  return out;
}

void RFFrame::validate() const {
  geometry.validate();
  if (samples.size() != static_cast<std::size_t>(geometry.element_count) * sample_count) {
    throw std::invalid_argument("rf frame: sample buffer does not match element_count x sample_count");
  }
  for (double v : samples) {
    if (!std::isfinite(v)) throw std::invalid_argument("rf frame: non-finite sample");
  }
}

}  // namespace pwe::acq

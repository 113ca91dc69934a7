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

#include "pwe/stats/nemenyi.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pwe::stats {

double studentized_range_cdf(double q, std::size_t k) {
  if (k < 2) throw std::invalid_argument("studentized range needs k >= 2");
  if (!(q > 0.0)) return 0.0;
  const boost::math::normal normal;
  const double km1 = static_cast<double>(k - 1);
  // P(Q <= q) = k * integral phi(z) [Phi(z) - Phi(z - q)]^(k - 1) dz
  auto integrand = [&](double z) {
    const double inner = boost::math::cdf(normal, z) - boost::math::cdf(normal, z - q);
    return boost::math::pdf(normal, z) * std::pow(std::max(inner, 0.0), km1);
  };
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, -9.0, q + 9.0, 15, 1e-12, &error);
  return std::clamp(static_cast<double>(k) * value, 0.0, 1.0);
}

Blocks nemenyi_posthoc(const Blocks& blocks) {
  validate_blocks(blocks);
  const double n = static_cast<double>(blocks.size());
  const std::size_t k = blocks.front().size();
  const double kd = static_cast<double>(k);
  const std::vector<double> ranks = mean_ranks(blocks);
  const double scale = std::sqrt(kd * (kd + 1.0) / (12.0 * n));
  Blocks p(k, std::vector<double>(k, 1.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double q = std::abs(ranks[i] - ranks[j]) / scale;
      p[i][j] = p[j][i] = 1.0 - studentized_range_cdf(q, k);
    }
  }
  return p;
}

}  // namespace pwe::stats

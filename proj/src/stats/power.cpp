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

#include "pwe/stats/power.hpp"

#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/non_central_f.hpp>
#include <stdexcept>
#include <string>

namespace pwe::stats {

double repeated_measures_power(std::size_t n, double effect_size, double alpha, std::size_t groups) {
  if (n < 2 || groups < 2) throw std::invalid_argument("power needs n >= 2 and groups >= 2");
  if (!(effect_size > 0.0)) throw std::invalid_argument("effect size must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  const double df1 = static_cast<double>(groups - 1);
  const double df2 = static_cast<double>(n - 1) * df1;
  const double lambda = static_cast<double>(n * groups) * effect_size * effect_size;
  const double critical = boost::math::quantile(boost::math::fisher_f(df1, df2), 1.0 - alpha);
  const boost::math::non_central_f alt(df1, df2, lambda);
  return boost::math::cdf(boost::math::complement(alt, critical));
}

std::size_t sample_size(const PowerQuery& q) {
  if (!(q.power > 0.0 && q.power < 1.0)) throw std::invalid_argument("power must lie in (0, 1)");
  for (std::size_t n = 2; n <= kMaxSampleSize; ++n) {
    if (repeated_measures_power(n, q.effect_size, q.alpha, q.groups) >= q.power) return n;
  }
  throw std::domain_error("power " + std::to_string(q.power) + " not reachable with n <= " +
                          std::to_string(kMaxSampleSize));
}

}  // namespace pwe::stats

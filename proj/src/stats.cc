// Copyright 2026 The pa-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "palab/stats.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace palab {

Interval WilsonInterval(uint64_t successes, uint64_t trials, double z) {
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  if (successes > trials) {
    throw std::invalid_argument("successes cannot exceed trials");
  }
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double center = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half =
      z / (1 + z2 / n) * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double WilsonHalfWidth(uint64_t successes, uint64_t trials, double z) {
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  return z / (1 + z2 / n) * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
}

}  // namespace palab

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

#ifndef PALAB_STATS_H_
#define PALAB_STATS_H_

#include <cstdint>

namespace palab {

// Two-sided 99% standard normal quantile.
inline constexpr double kZ99 = 2.5758293035489004;

struct Interval {
  double lo = 0;
  double hi = 0;

  bool Overlaps(const Interval& other) const {
    return lo <= other.hi && other.lo <= hi;
  }
};

// Wilson score interval for `successes` out of `trials`.
Interval WilsonInterval(uint64_t successes, uint64_t trials, double z = kZ99);

// Half the width of WilsonInterval.
double WilsonHalfWidth(uint64_t successes, uint64_t trials, double z = kZ99);

}  // namespace palab

#endif  // PALAB_STATS_H_

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

#ifndef PALAB_RNG_H_
#define PALAB_RNG_H_

#include <cstdint>
#include <random>

namespace palab {

// All randomness in the library flows through a 64-bit Mersenne Twister
// (std::mt19937_64) seeded directly with the run seed.
using Rng = std::mt19937_64;

inline Rng MakeRng(uint64_t seed) { return Rng(seed); }

// Seed of the independent stream number `index` under `master`, computed with
// the SplitMix64 finalizer. Used so that Monte Carlo trials are independent
// of the order in which they are scheduled.
uint64_t DeriveSeed(uint64_t master, uint64_t index);

// Uniform integer in [0, bound). `bound` must be positive.
inline uint64_t UniformBelow(Rng& rng, uint64_t bound) {
  return std::uniform_int_distribution<uint64_t>(0, bound - 1)(rng);
}

}  // namespace palab

#endif  // PALAB_RNG_H_

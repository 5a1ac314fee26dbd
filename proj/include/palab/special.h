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

#ifndef PALAB_SPECIAL_H_
#define PALAB_SPECIAL_H_

#include <gmpxx.h>

#include <cstdint>

namespace palab {

// log|Γ(x)| and the sign of Γ(x) (std::lgamma / lgamma_r). x must not be a
// non-positive integer.
struct SignedLog {
  double log_abs;
  int sign;
};
SignedLog SignedLogGamma(double x);

// Generalized binomial C(x, y) = Γ(x + 1) / (Γ(y + 1) Γ(x - y + 1)) in
// signed log form. None of x + 1, y + 1, x - y + 1 may be a non-positive
// integer.
SignedLog SignedLogChoose(double x, double y);

// Ordinary log C(n, k) for 0 <= k <= n.
double LogChoose(uint64_t n, uint64_t k);

// Rising factorial (x)_n = x (x + 1) ... (x + n - 1), exact.
mpq_class RisingFactorial(const mpq_class& x, uint64_t n);

mpz_class Binomial(uint64_t n, uint64_t k);

}  // namespace palab

#endif  // PALAB_SPECIAL_H_

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

#include "palab/special.h"

#include <cmath>
#include <stdexcept>

namespace palab {

SignedLog SignedLogGamma(double x) {
  if (x <= 0 && x == std::floor(x)) {
    throw std::domain_error("Gamma pole at non-positive integer");
  }
  int sign = 1;
  const double log_abs = lgamma_r(x, &sign);
  return {log_abs, sign};
}

SignedLog SignedLogChoose(double x, double y) {
  const SignedLog top = SignedLogGamma(x + 1);
  const SignedLog left = SignedLogGamma(y + 1);
  const SignedLog right = SignedLogGamma(x - y + 1);
  return {top.log_abs - left.log_abs - right.log_abs,
          top.sign * left.sign * right.sign};
}

double LogChoose(uint64_t n, uint64_t k) {
  if (k > n) throw std::domain_error("LogChoose with k > n");
  return std::lgamma(static_cast<double>(n) + 1) -
         std::lgamma(static_cast<double>(k) + 1) -
         std::lgamma(static_cast<double>(n - k) + 1);
}

mpq_class RisingFactorial(const mpq_class& x, uint64_t n) {
  // Accumulate numerator and denominator separately and reduce once.
  mpz_class num(1);
  const mpz_class& den = x.get_den();
  mpz_class den_power(1);
  mpz_class term = x.get_num();
  for (uint64_t i = 0; i < n; ++i) {
    num *= term;
    term += den;
    den_power *= den;
  }
  mpq_class out(num, den_power);
  out.canonicalize();
  return out;
}

mpz_class Binomial(uint64_t n, uint64_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace palab

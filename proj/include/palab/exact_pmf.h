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

#ifndef PALAB_EXACT_PMF_H_
#define PALAB_EXACT_PMF_H_

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace palab {

// An exact probability mass function over consecutive integer values
// offset, offset + 1, ..., stored as integer numerators over one common
// denominator. Exact dynamic programs keep this form so each step is a
// handful of small-integer multiplies instead of rational reductions.
class ExactPmf {
 public:
  ExactPmf() : denominator_(1) {}
  ExactPmf(int64_t offset, std::vector<mpz_class> numerators,
           mpz_class denominator);

  static ExactPmf PointMass(int64_t value);
  // Normalizes an arbitrary vector of rationals onto a common denominator.
  static ExactPmf FromRationals(int64_t offset,
                                const std::vector<mpq_class>& probabilities);

  int64_t min_value() const { return offset_; }
  int64_t max_value() const {
    return offset_ + static_cast<int64_t>(numerators_.size()) - 1;
  }
  const std::vector<mpz_class>& numerators() const { return numerators_; }
  const mpz_class& denominator() const { return denominator_; }
  // In-place access for dynamic programs that advance the law step by step.
  std::vector<mpz_class>& mutable_numerators() { return numerators_; }
  mpz_class& mutable_denominator() { return denominator_; }
  void set_offset(int64_t offset) { offset_ = offset; }

  // Probability of `value` in lowest terms; zero outside the stored range.
  mpq_class At(int64_t value) const;
  double AtDouble(int64_t value) const;
  std::vector<mpq_class> ToRationals() const;

  // Σ numerators == denominator and every numerator >= 0.
  bool IsNormalized() const;

  // Exact equality of the two laws as functions of the value.
  friend bool operator==(const ExactPmf& a, const ExactPmf& b);

 private:
  int64_t offset_ = 0;
  std::vector<mpz_class> numerators_;
  mpz_class denominator_;
};

}  // namespace palab

#endif  // PALAB_EXACT_PMF_H_

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

#include "palab/exact_pmf.h"

#include <algorithm>
#include <stdexcept>

namespace palab {

ExactPmf::ExactPmf(int64_t offset, std::vector<mpz_class> numerators,
                   mpz_class denominator)
    : offset_(offset),
      numerators_(std::move(numerators)),
      denominator_(std::move(denominator)) {
  if (sgn(denominator_) <= 0) {
    throw std::invalid_argument("pmf denominator must be positive");
  }
}

ExactPmf ExactPmf::PointMass(int64_t value) {
  return ExactPmf(value, {mpz_class(1)}, mpz_class(1));
}

ExactPmf ExactPmf::FromRationals(int64_t offset,
                                 const std::vector<mpq_class>& probabilities) {
  mpz_class common(1);
  for (const mpq_class& p : probabilities) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(),
            p.get_den_mpz_t());
  }
  std::vector<mpz_class> numerators;
  numerators.reserve(probabilities.size());
  for (const mpq_class& p : probabilities) {
    numerators.push_back(p.get_num() * (common / p.get_den()));
  }
  return ExactPmf(offset, std::move(numerators), common);
}

mpq_class ExactPmf::At(int64_t value) const {
  if (value < offset_ || value > max_value()) return mpq_class(0);
  mpq_class p(numerators_[value - offset_], denominator_);
  p.canonicalize();
  return p;
}

double ExactPmf::AtDouble(int64_t value) const { return At(value).get_d(); }

std::vector<mpq_class> ExactPmf::ToRationals() const {
  std::vector<mpq_class> out;
  out.reserve(numerators_.size());
  for (int64_t v = offset_; v <= max_value(); ++v) out.push_back(At(v));
  return out;
}

bool ExactPmf::IsNormalized() const {
  mpz_class total(0);
  for (const mpz_class& x : numerators_) {
    if (sgn(x) < 0) return false;
    total += x;
  }
  return total == denominator_;
}

bool operator==(const ExactPmf& a, const ExactPmf& b) {
  const int64_t lo = std::min(a.min_value(), b.min_value());
  const int64_t hi = std::max(a.max_value(), b.max_value());
  const bool same_denominator = a.denominator_ == b.denominator_;
  static const mpz_class kZero(0);
  mpz_class lhs, rhs;
  for (int64_t v = lo; v <= hi; ++v) {
    const bool in_a = v >= a.min_value() && v <= a.max_value();
    const bool in_b = v >= b.min_value() && v <= b.max_value();
    const mpz_class& x = in_a ? a.numerators_[v - a.offset_] : kZero;
    const mpz_class& y = in_b ? b.numerators_[v - b.offset_] : kZero;
    if (same_denominator) {
      if (x != y) return false;
      continue;
    }
    lhs = x * b.denominator_;
    rhs = y * a.denominator_;
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace palab

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

#include "palab/exact_dist.h"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>

#include "palab/errors.h"

namespace palab {
namespace {

constexpr double kClampBelow = 1e-300;
constexpr double kDriftLimit = 1e-9;
constexpr uint64_t kRenormalizeEvery = 256;

void CheckExactCap(uint64_t n, const ArithmeticMode& mode) {
  if (mode.kind == Arithmetic::kExactRational && n > mode.exact_cap) {
    throw std::invalid_argument("exact-rational mode is capped at n <= " +
                                std::to_string(mode.exact_cap) + " (got " +
                                std::to_string(n) + ")");
  }
}

}  // namespace

DegreeDistribution DegreeDistribution::Exact(uint64_t time, ExactPmf law) {
  if (law.min_value() < 0) {
    throw std::invalid_argument("degree support must be non-negative");
  }
  DegreeDistribution d;
  d.time_ = time;
  d.mode_ = Arithmetic::kExactRational;
  d.support_min_ = static_cast<uint64_t>(law.min_value());
  d.exact_ = std::move(law);
  return d;
}

DegreeDistribution DegreeDistribution::Float(uint64_t time,
                                             uint64_t support_min,
                                             std::vector<double> probabilities,
                                             double clamped_mass,
                                             double max_drift) {
  DegreeDistribution d;
  d.time_ = time;
  d.mode_ = Arithmetic::kFloat;
  d.support_min_ = support_min;
  d.values_ = std::move(probabilities);
  d.clamped_mass_ = clamped_mass;
  d.max_drift_ = max_drift;
  return d;
}

DegreeDistribution DegreeDistribution::PointMass(uint64_t time,
                                                 uint64_t degree,
                                                 Arithmetic kind) {
  if (kind == Arithmetic::kExactRational) {
    return Exact(time, ExactPmf::PointMass(static_cast<int64_t>(degree)));
  }
  return Float(time, degree, {1.0});
}

uint64_t DegreeDistribution::support_max() const {
  if (mode_ == Arithmetic::kExactRational) {
    return static_cast<uint64_t>(exact_.max_value());
  }
  return support_min_ + values_.size() - 1;
}

double DegreeDistribution::Probability(uint64_t degree) const {
  if (mode_ == Arithmetic::kExactRational) {
    return exact_.AtDouble(static_cast<int64_t>(degree));
  }
  if (degree < support_min_ || degree > support_max()) return 0.0;
  return values_[degree - support_min_];
}

mpq_class DegreeDistribution::ExactProbability(uint64_t degree) const {
  return exact().At(static_cast<int64_t>(degree));
}

const ExactPmf& DegreeDistribution::exact() const {
  if (mode_ != Arithmetic::kExactRational) {
    throw std::invalid_argument("distribution is not in exact mode");
  }
  return exact_;
}

const std::vector<double>& DegreeDistribution::values() const {
  if (mode_ != Arithmetic::kFloat) {
    throw std::invalid_argument("distribution is not in float mode");
  }
  return values_;
}

DegreeDistribution DegreeDistribution::ToFloat() const {
  if (mode_ == Arithmetic::kFloat) return *this;
  std::vector<double> p;
  p.reserve(exact_.numerators().size());
  for (int64_t v = exact_.min_value(); v <= exact_.max_value(); ++v) {
    p.push_back(exact_.AtDouble(v));
  }
  return Float(time_, support_min_, std::move(p));
}

ExactDegreeDp::ExactDegreeDp(uint64_t time, ExactPmf law)
    : time_(time), law_(std::move(law)) {}

void ExactDegreeDp::Step() {
  ++time_;
  const uint64_t slots = 2 * time_ - 1;
  const uint64_t lo = static_cast<uint64_t>(law_.min_value());
  std::vector<mpz_class>& num = law_.mutable_numerators();
  const size_t size = num.size();
  num.emplace_back(0);
  // Walk downwards so num[i - 1] still holds the previous step's value.
  mpz_mul_ui(num[size].get_mpz_t(), num[size - 1].get_mpz_t(),
             lo + size - 1);
  for (size_t i = size - 1; i > 0; --i) {
    const uint64_t x = lo + i;
    mpz_mul_ui(num[i].get_mpz_t(), num[i].get_mpz_t(), slots - x);
    mpz_addmul_ui(num[i].get_mpz_t(), num[i - 1].get_mpz_t(), x - 1);
  }
  mpz_mul_ui(num[0].get_mpz_t(), num[0].get_mpz_t(), slots - lo);
  mpz_mul_ui(law_.mutable_denominator().get_mpz_t(),
             law_.denominator().get_mpz_t(), slots);
}

FloatDegreeDp::FloatDegreeDp(uint64_t time, uint64_t support_min,
                             std::vector<double> probabilities)
    : time_(time), support_min_(support_min), p_(std::move(probabilities)) {}

void FloatDegreeDp::Step() {
  ++time_;
  const double slots = static_cast<double>(2 * time_ - 1);
  const size_t size = p_.size();
  p_.push_back(p_[size - 1] * static_cast<double>(support_min_ + size - 1) /
               slots);
  for (size_t i = size - 1; i > 0; --i) {
    const double x = static_cast<double>(support_min_ + i);
    p_[i] = p_[i] * ((slots - x) / slots) + p_[i - 1] * ((x - 1) / slots);
  }
  p_[0] *= (slots - static_cast<double>(support_min_)) / slots;
  for (double& v : p_) {
    if (v != 0.0 && v < kClampBelow) {
      clamped_mass_ += v;
      v = 0.0;
    }
  }
  while (p_.size() > 1 && p_.back() == 0.0) p_.pop_back();
  if (time_ % kRenormalizeEvery == 0) Renormalize();
}

void FloatDegreeDp::Renormalize() {
  double total = 0;
  for (double v : p_) total += v;
  const double drift = std::abs(total - 1.0);
  if (drift > max_drift_) max_drift_ = drift;
  if (drift > kDriftLimit) {
    throw InternalError("float DP drifted by " + std::to_string(drift));
  }
  for (double& v : p_) v /= total;
}

DegreeDistribution FloatDegreeDp::Snapshot() const {
  FloatDegreeDp copy = *this;
  copy.Renormalize();
  return DegreeDistribution::Float(copy.time_, copy.support_min_,
                                   std::move(copy.p_), copy.clamped_mass_,
                                   copy.max_drift_);
}

DegreeDistribution ForwardDp(const DegreeDistribution& initial, uint64_t n,
                             ArithmeticMode mode) {
  const uint64_t t0 = initial.time();
  if (n < t0) {
    throw std::invalid_argument("horizon n = " + std::to_string(n) +
                                " precedes initial time " + std::to_string(t0));
  }
  if (initial.mode() == Arithmetic::kFloat &&
      mode.kind == Arithmetic::kExactRational) {
    throw std::invalid_argument("cannot run exact DP from a float law");
  }
  for (uint64_t x = initial.support_min(); x <= initial.support_max(); ++x) {
    if (x > 2 * t0 && initial.Probability(x) > 0) {
      throw std::invalid_argument("initial law puts mass on degree " +
                                  std::to_string(x) + " > 2 * t0 = " +
                                  std::to_string(2 * t0));
    }
  }
  CheckExactCap(n, mode);
  if (mode.kind == Arithmetic::kExactRational) {
    ExactDegreeDp dp(t0, initial.exact());
    while (dp.time() < n) dp.Step();
    return DegreeDistribution::Exact(n, dp.law());
  }
  const DegreeDistribution start = initial.ToFloat();
  FloatDegreeDp dp(t0, start.support_min(), start.values());
  while (dp.time() < n) dp.Step();
  return dp.Snapshot();
}

DegreeDistribution VertexDist(uint64_t t, uint64_t n, ArithmeticMode mode) {
  if (t == 0) throw std::invalid_argument("t must be >= 1");
  if (t > n) {
    throw std::invalid_argument("vertex t = " + std::to_string(t) +
                                " born after n = " + std::to_string(n));
  }
  CheckExactCap(n, mode);
  // At its birth step v_t has degree 2 (self-loop) with probability
  // 1 / (2t - 1) and degree 1 otherwise.
  const uint64_t slots = 2 * t - 1;
  DegreeDistribution birth =
      (mode.kind == Arithmetic::kExactRational)
          ? DegreeDistribution::Exact(
                t, ExactPmf(1, {mpz_class(slots - 1), mpz_class(1)},
                            mpz_class(slots)))
          : DegreeDistribution::Float(
                t, 1, {1.0 - 1.0 / static_cast<double>(slots),
                       1.0 / static_cast<double>(slots)});
  if (t == 1) birth = DegreeDistribution::PointMass(1, 2, mode.kind);
  return ForwardDp(birth, n, mode);
}

DegreeDistribution ConditionalDist(uint64_t t, uint64_t d, uint64_t n,
                                   ArithmeticMode mode) {
  if (t == 0) throw std::invalid_argument("t must be >= 1");
  if (d == 0 || d > 2 * t) {
    throw std::invalid_argument("conditioning degree d = " + std::to_string(d) +
                                " outside 1..2t = " + std::to_string(2 * t));
  }
  if (n < t) throw std::invalid_argument("n must be >= t");
  return ForwardDp(DegreeDistribution::PointMass(t, d, mode.kind), n, mode);
}

double TailProb(const DegreeDistribution& dist, double threshold) {
  if (dist.mode() == Arithmetic::kExactRational) {
    return TailProbExact(dist, threshold).get_d();
  }
  double total = 0;
  for (uint64_t x = dist.support_max() + 1; x-- > dist.support_min();) {
    if (static_cast<double>(x) <= threshold) break;
    total += dist.Probability(x);
  }
  return total;
}

mpq_class TailProbExact(const DegreeDistribution& dist, double threshold) {
  const ExactPmf& law = dist.exact();
  mpz_class total(0);
  for (int64_t x = law.max_value(); x >= law.min_value(); --x) {
    if (static_cast<double>(x) <= threshold) break;
    total += law.numerators()[x - law.min_value()];
  }
  mpq_class out(total, law.denominator());
  out.canonicalize();
  return out;
}

DistMoments Moments(const DegreeDistribution& dist) {
  if (dist.mode() == Arithmetic::kExactRational) {
    const ExactMoments exact = MomentsExact(dist);
    return {exact.mean.get_d(), exact.variance.get_d()};
  }
  double mean = 0;
  for (uint64_t x = dist.support_min(); x <= dist.support_max(); ++x) {
    mean += static_cast<double>(x) * dist.Probability(x);
  }
  double variance = 0;
  for (uint64_t x = dist.support_min(); x <= dist.support_max(); ++x) {
    const double dx = static_cast<double>(x) - mean;
    variance += dx * dx * dist.Probability(x);
  }
  return {mean, variance};
}

ExactMoments MomentsExact(const DegreeDistribution& dist) {
  const ExactPmf& law = dist.exact();
  mpz_class first(0), second(0);
  for (int64_t x = law.min_value(); x <= law.max_value(); ++x) {
    const mpz_class& w = law.numerators()[x - law.min_value()];
    first += w * x;
    second += w * x * x;
  }
  mpq_class mean(first, law.denominator());
  mean.canonicalize();
  mpq_class raw_second(second, law.denominator());
  raw_second.canonicalize();
  mpq_class variance = raw_second - mean * mean;
  return {mean, variance};
}

void WriteDistributionCsv(std::ostream& out, const DegreeDistribution& dist) {
  out << "degree,probability\n";
  if (dist.mode() == Arithmetic::kExactRational) {
    for (uint64_t x = dist.support_min(); x <= dist.support_max(); ++x) {
      const mpq_class p = dist.ExactProbability(x);
      out << x << ',' << p.get_num() << '/' << p.get_den() << '\n';
    }
    return;
  }
  out << std::setprecision(17);
  for (uint64_t x = dist.support_min(); x <= dist.support_max(); ++x) {
    out << x << ',' << dist.Probability(x) << '\n';
  }
}

}  // namespace palab

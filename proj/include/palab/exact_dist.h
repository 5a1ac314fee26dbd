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

#ifndef PALAB_EXACT_DIST_H_
#define PALAB_EXACT_DIST_H_

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "palab/exact_pmf.h"

namespace palab {

enum class Arithmetic { kExactRational, kFloat };

struct ArithmeticMode {
  Arithmetic kind = Arithmetic::kFloat;
  // Largest horizon accepted in exact-rational mode.
  uint64_t exact_cap = 2000;

  static ArithmeticMode Exact(uint64_t cap = 2000) {
    return {Arithmetic::kExactRational, cap};
  }
  static ArithmeticMode Float() { return {Arithmetic::kFloat, 2000}; }
};

// Law of a degree (of one vertex or a vertex set) at a fixed time, stored
// densely over [support_min, support_max].
class DegreeDistribution {
 public:
  static DegreeDistribution Exact(uint64_t time, ExactPmf law);
  static DegreeDistribution Float(uint64_t time, uint64_t support_min,
                                  std::vector<double> probabilities,
                                  double clamped_mass = 0,
                                  double max_drift = 0);
  static DegreeDistribution PointMass(uint64_t time, uint64_t degree,
                                      Arithmetic kind);

  uint64_t time() const { return time_; }
  Arithmetic mode() const { return mode_; }
  uint64_t support_min() const { return support_min_; }
  uint64_t support_max() const;

  double Probability(uint64_t degree) const;
  // Exact mode only.
  mpq_class ExactProbability(uint64_t degree) const;
  const ExactPmf& exact() const;
  // Float mode only.
  const std::vector<double>& values() const;

  // Float mode bookkeeping: total mass of entries clamped to zero below
  // 1e-300, and the largest |Σp - 1| seen at a renormalization.
  double clamped_mass() const { return clamped_mass_; }
  double max_drift() const { return max_drift_; }

  DegreeDistribution ToFloat() const;

 private:
  DegreeDistribution() = default;

  uint64_t time_ = 0;
  Arithmetic mode_ = Arithmetic::kFloat;
  uint64_t support_min_ = 0;
  ExactPmf exact_;
  std::vector<double> values_;
  double clamped_mass_ = 0;
  double max_drift_ = 0;
};

// Steps the law of D(t) exactly:
//   P[x -> x + 1] = x / (2t - 1),  P[x -> x] = 1 - x / (2t - 1).
class ExactDegreeDp {
 public:
  ExactDegreeDp(uint64_t time, ExactPmf law);
  void Step();
  uint64_t time() const { return time_; }
  const ExactPmf& law() const { return law_; }

 private:
  uint64_t time_;
  ExactPmf law_;
};

// Same recurrence in double precision with periodic renormalization.
class FloatDegreeDp {
 public:
  FloatDegreeDp(uint64_t time, uint64_t support_min,
                std::vector<double> probabilities);
  void Step();
  uint64_t time() const { return time_; }
  DegreeDistribution Snapshot() const;

 private:
  void Renormalize();

  uint64_t time_;
  uint64_t support_min_;
  std::vector<double> p_;
  double clamped_mass_ = 0;
  double max_drift_ = 0;
};

// Law of D(n) given the law at initial.time(). Throws std::invalid_argument
// if n < initial.time(), if the initial law puts mass on a degree above
// 2 * initial.time(), or if exact mode is requested beyond mode.exact_cap.
DegreeDistribution ForwardDp(const DegreeDistribution& initial, uint64_t n,
                             ArithmeticMode mode);

// Law of d_1^n(v_t).
DegreeDistribution VertexDist(uint64_t t, uint64_t n, ArithmeticMode mode);
// Law of D(n) given D(t) = d, for any vertex set fixed by time t.
DegreeDistribution ConditionalDist(uint64_t t, uint64_t d, uint64_t n,
                                   ArithmeticMode mode);

// Σ_{k > threshold} p(k).
double TailProb(const DegreeDistribution& dist, double threshold);
mpq_class TailProbExact(const DegreeDistribution& dist, double threshold);

struct DistMoments {
  double mean;
  double variance;
};
DistMoments Moments(const DegreeDistribution& dist);

struct ExactMoments {
  mpq_class mean;
  mpq_class variance;
};
ExactMoments MomentsExact(const DegreeDistribution& dist);

// CSV with header "degree,probability"; exact values as "num/den".
void WriteDistributionCsv(std::ostream& out, const DegreeDistribution& dist);

}  // namespace palab

#endif  // PALAB_EXACT_DIST_H_

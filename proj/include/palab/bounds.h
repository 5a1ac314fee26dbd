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

#ifndef PALAB_BOUNDS_H_
#define PALAB_BOUNDS_H_

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "palab/exact_dist.h"
#include "palab/stats.h"

namespace palab {

// One verdict of a bound against a measured (exact or sampled) probability.
// For exact reports trials and ci_halfwidth are 0.
struct BoundReport {
  std::string name;
  double measured = 0;
  double bound = 0;
  bool holds = false;
  std::string method;  // "exact" or "monte-carlo"
  uint64_t trials = 0;
  double ci_halfwidth = 0;
  std::string note;
  // Exact value as "num/den"; empty for Monte Carlo reports.
  std::string measured_exact;
};

nlohmann::json ToJson(const BoundReport& report);
BoundReport BoundReportFromJson(const nlohmann::json& j);
void WriteReportsJson(std::ostream& out, const std::vector<BoundReport>& reports);
void WriteReportsCsv(std::ostream& out, const std::vector<BoundReport>& reports);

// P[d_1^n(v_1) > threshold], exactly, from the closed form of the degree
// law of the first vertex. Valid for every n >= 1.
mpq_class FirstVertexTailExact(uint64_t n, double threshold);

// Tail of the first vertex's degree above c*sqrt(n) against exp(-c^2/4).
// Exact mode uses the exact forward recursion up to mode.exact_cap and the
// closed form beyond it; float mode runs the floating-point recursion.
BoundReport FirstVertexTail(double c, uint64_t n, ArithmeticMode mode);

// P[d_1^n(v_1) <= eps*sqrt(n)] against 1/n; holds iff measured >= 1/n.
BoundReport SmallDegreeProb(uint64_t n, double epsilon, ArithmeticMode mode);

struct SmallDegreeScan {
  std::vector<BoundReport> reports;
  // Smallest tested n at which the report holds.
  std::optional<uint64_t> smallest_holding;
};
SmallDegreeScan ScanSmallDegree(const std::vector<uint64_t>& ns,
                                double epsilon, ArithmeticMode mode);

struct ShortTermSpec {
  uint64_t t = 0;
  double delta = 0;
  uint64_t d0 = 0;
  uint64_t trials = 0;
  uint64_t seed = 0;
  int jobs = 0;
};

// Degree of a set with D(t) = d0, run forward to time `end` with the one-step
// law P[+1] = D / (2j - 1) for the step into time j.
uint64_t SimulateConditionalDegree(uint64_t t, uint64_t d0, uint64_t end,
                                   uint64_t seed);

// Frequency of D((1+delta)t) <= (1 + delta/2 - 2 delta^2) d0 against
// exp(-delta^3 d0 / 16).
BoundReport ShortTermLower(const ShortTermSpec& spec);
// Frequency of D((1+delta)t) >= (1 + delta/2 + 2 delta^2) d0 against
// ln(2et) exp(-delta^3 d0 / 8).
BoundReport ShortTermUpper(const ShortTermSpec& spec);

struct BandCheckSpec {
  uint64_t t = 0;
  double epsilon = 0;
  uint64_t d0 = 0;
  uint64_t horizon = 0;
  uint64_t trials = 0;
  uint64_t seed = 0;
  int jobs = 0;

  // Throws std::invalid_argument for unusable parameters.
  void Validate() const;
  // True when epsilon <= 1/40 and t > epsilon^-6.
  bool MatchesTheoremRegime() const;
};

struct BandCheckResult {
  // measured is the frequency of leaving the band at some n <= horizon; the
  // bound is the theorem's failure bound, reported but not a criterion.
  BoundReport report;
  uint64_t in_band = 0;
  Interval in_band_ci;

  double in_band_fraction() const {
    return static_cast<double>(in_band) / static_cast<double>(report.trials);
  }
};

BandCheckResult BandCheck(const BandCheckSpec& spec);

// True iff the in-band fractions strictly increase along `results` and
// consecutive 99% intervals are disjoint.
bool BandTrendIncreasing(const std::vector<BandCheckResult>& results);

// E[d_1^n(v_1)] = prod_{j<n} (2j+2)/(2j+1), evaluated in log space.
double MeanOracle(uint64_t n);

struct SampleMean {
  double mean = 0;
  double standard_error = 0;
  uint64_t trials = 0;
};

// Sample mean of the first vertex's degree over independently generated
// graphs with n vertices (m = 1).
SampleMean MonteCarloFirstVertexMean(uint64_t n, uint64_t trials,
                                     uint64_t seed, int jobs);

}  // namespace palab

#endif  // PALAB_BOUNDS_H_

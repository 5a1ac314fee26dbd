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

#include "palab/bounds.h"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "palab/pa_process.h"
#include "palab/parallel.h"
#include "palab/rng.h"

namespace palab {
namespace {

std::string RationalString(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Rational compare against a double bound; the double is exact as a rational.
bool AtMost(const mpq_class& value, double bound) {
  return cmp(value, mpq_class(bound)) <= 0;
}

void ValidateShortTerm(const ShortTermSpec& spec) {
  if (!(spec.delta > 0 && spec.delta < 1)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
  if (static_cast<double>(spec.t) < 2 / (spec.delta * spec.delta)) {
    throw std::invalid_argument("t must satisfy t >= 2/delta^2");
  }
  if (spec.d0 < 1 || spec.d0 > 2 * spec.t) {
    throw std::invalid_argument("d0 must lie in 1..2t");
  }
  if (spec.trials < 1) throw std::invalid_argument("trials must be >= 1");
}

uint64_t ShortTermEnd(const ShortTermSpec& spec) {
  return static_cast<uint64_t>(
      std::floor((1 + spec.delta) * static_cast<double>(spec.t)));
}

// Per-trial outcome stored as a byte so RunIndexed can write concurrently.
using Flag = unsigned char;

uint64_t CountFlags(const std::vector<Flag>& flags) {
  uint64_t count = 0;
  for (Flag f : flags) count += f;
  return count;
}

BoundReport MonteCarloReport(std::string name, uint64_t hits, uint64_t trials,
                             double bound) {
  BoundReport r;
  r.name = std::move(name);
  r.method = "monte-carlo";
  r.trials = trials;
  r.measured = static_cast<double>(hits) / static_cast<double>(trials);
  r.bound = bound;
  r.ci_halfwidth = WilsonHalfWidth(hits, trials);
  r.holds = r.measured <= r.bound + r.ci_halfwidth;
  return r;
}

}  // namespace

nlohmann::json ToJson(const BoundReport& report) {
  nlohmann::json j = {{"name", report.name},
                      {"measured", report.measured},
                      {"bound", report.bound},
                      {"holds", report.holds},
                      {"method", report.method},
                      {"trials", report.trials},
                      {"ci_halfwidth", report.ci_halfwidth}};
  if (!report.note.empty()) j["note"] = report.note;
  if (!report.measured_exact.empty()) {
    j["measured_exact"] = report.measured_exact;
  }
  return j;
}

BoundReport BoundReportFromJson(const nlohmann::json& j) {
  BoundReport r;
  r.name = j.at("name").get<std::string>();
  r.measured = j.at("measured").get<double>();
  r.bound = j.at("bound").get<double>();
  r.holds = j.at("holds").get<bool>();
  r.method = j.at("method").get<std::string>();
  r.trials = j.at("trials").get<uint64_t>();
  r.ci_halfwidth = j.at("ci_halfwidth").get<double>();
  r.note = j.value("note", "");
  r.measured_exact = j.value("measured_exact", "");
  return r;
}

void WriteReportsJson(std::ostream& out,
                      const std::vector<BoundReport>& reports) {
  nlohmann::json array = nlohmann::json::array();
  for (const BoundReport& r : reports) array.push_back(ToJson(r));
  out << array.dump(2) << '\n';
}

void WriteReportsCsv(std::ostream& out,
                     const std::vector<BoundReport>& reports) {
  out << "name,measured,bound,holds,method,trials,ci_halfwidth\n";
  const auto old_precision = out.precision(17);
  for (const BoundReport& r : reports) {
    out << r.name << ',' << r.measured << ',' << r.bound << ','
        << (r.holds ? "true" : "false") << ',' << r.method << ',' << r.trials
        << ',' << r.ci_halfwidth << '\n';
  }
  out.precision(old_precision);
}

mpq_class FirstVertexTailExact(uint64_t n, double threshold) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  // P[d = k] = (k-1)/n 2^(k-1) C(2n-k, n-1) / C(2n, n) for 2 <= k <= n+1.
  mpz_class total(0);
  mpz_class binom = 1;  // C(2n-k, n-1) at k = n+1
  mpz_class term;
  for (uint64_t k = n + 1; k >= 2; --k) {
    if (static_cast<double>(k) <= threshold) break;
    if (k < n + 1) {
      // C(2n-k, n-1) = C(2n-k-1, n-1) (2n-k) / (n-k+1)
      binom *= 2 * n - k;
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), n - k + 1);
    }
    term = binom * (k - 1);
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), k - 1);
    total += term;
  }
  mpz_class den;
  mpz_bin_uiui(den.get_mpz_t(), 2 * n, n);
  den *= n;
  mpq_class out(total, den);
  out.canonicalize();
  return out;
}

BoundReport FirstVertexTail(double c, uint64_t n, ArithmeticMode mode) {
  if (!(c > 0)) throw std::invalid_argument("c must be positive");
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  const double threshold = c * std::sqrt(static_cast<double>(n));
  BoundReport r;
  r.name = "first_vertex_tail(c=" + std::to_string(c) +
           ",n=" + std::to_string(n) + ")";
  r.method = "exact";
  r.bound = std::exp(-c * c / 4);
  if (mode.kind == Arithmetic::kExactRational) {
    mpq_class tail;
    if (n <= mode.exact_cap) {
      tail = TailProbExact(VertexDist(1, n, mode), threshold);
      r.note = "exact forward recursion";
    } else {
      tail = FirstVertexTailExact(n, threshold);
      r.note = "exact closed form";
    }
    r.measured = tail.get_d();
    r.measured_exact = RationalString(tail);
    r.holds = AtMost(tail, r.bound);
  } else {
    r.measured = TailProb(VertexDist(1, n, mode), threshold);
    r.note = "floating-point forward recursion";
    r.holds = r.measured <= r.bound;
  }
  return r;
}

BoundReport SmallDegreeProb(uint64_t n, double epsilon, ArithmeticMode mode) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  const double threshold = epsilon * std::sqrt(static_cast<double>(n));
  BoundReport r;
  r.name = "small_degree_prob(eps=" + std::to_string(epsilon) +
           ",n=" + std::to_string(n) + ")";
  r.method = "exact";
  r.bound = 1 / static_cast<double>(n);
  r.note = "lower bound: holds iff measured >= bound";
  if (mode.kind == Arithmetic::kExactRational) {
    const mpq_class at_most =
        1 - (n <= mode.exact_cap
                 ? TailProbExact(VertexDist(1, n, mode), threshold)
                 : FirstVertexTailExact(n, threshold));
    r.measured = at_most.get_d();
    r.measured_exact = RationalString(at_most);
    r.holds = cmp(at_most, mpq_class(1, n)) >= 0;
  } else {
    r.measured = 1 - TailProb(VertexDist(1, n, mode), threshold);
    r.holds = r.measured >= r.bound;
  }
  return r;
}

SmallDegreeScan ScanSmallDegree(const std::vector<uint64_t>& ns,
                                double epsilon, ArithmeticMode mode) {
  SmallDegreeScan scan;
  for (uint64_t n : ns) {
    scan.reports.push_back(SmallDegreeProb(n, epsilon, mode));
    if (scan.reports.back().holds &&
        (!scan.smallest_holding || n < *scan.smallest_holding)) {
      scan.smallest_holding = n;
    }
  }
  return scan;
}

uint64_t SimulateConditionalDegree(uint64_t t, uint64_t d0, uint64_t end,
                                   uint64_t seed) {
  Rng rng = MakeRng(seed);
  uint64_t d = d0;
  for (uint64_t j = t + 1; j <= end; ++j) {
    if (UniformBelow(rng, 2 * j - 1) < d) ++d;
  }
  return d;
}

BoundReport ShortTermLower(const ShortTermSpec& spec) {
  ValidateShortTerm(spec);
  const uint64_t end = ShortTermEnd(spec);
  const double delta = spec.delta;
  const double level =
      (1 + delta / 2 - 2 * delta * delta) * static_cast<double>(spec.d0);
  const std::vector<Flag> below =
      RunIndexed(spec.trials, spec.jobs, [&](uint64_t i) -> Flag {
        const uint64_t d = SimulateConditionalDegree(
            spec.t, spec.d0, end, DeriveSeed(spec.seed, i));
        return static_cast<double>(d) <= level;
      });
  return MonteCarloReport(
      "short_term_lower(t=" + std::to_string(spec.t) +
          ",delta=" + std::to_string(delta) +
          ",d0=" + std::to_string(spec.d0) + ")",
      CountFlags(below), spec.trials,
      std::exp(-delta * delta * delta * static_cast<double>(spec.d0) / 16));
}

BoundReport ShortTermUpper(const ShortTermSpec& spec) {
  ValidateShortTerm(spec);
  if (spec.delta > std::exp(-2.0)) {
    throw std::invalid_argument("upper bound requires delta <= 1/e^2");
  }
  const uint64_t end = ShortTermEnd(spec);
  const double delta = spec.delta;
  const double level =
      (1 + delta / 2 + 2 * delta * delta) * static_cast<double>(spec.d0);
  const std::vector<Flag> above =
      RunIndexed(spec.trials, spec.jobs, [&](uint64_t i) -> Flag {
        const uint64_t d = SimulateConditionalDegree(
            spec.t, spec.d0, end, DeriveSeed(spec.seed, i));
        return static_cast<double>(d) >= level;
      });
  const double t = static_cast<double>(spec.t);
  return MonteCarloReport(
      "short_term_upper(t=" + std::to_string(spec.t) +
          ",delta=" + std::to_string(delta) +
          ",d0=" + std::to_string(spec.d0) + ")",
      CountFlags(above), spec.trials,
      std::log(2 * std::exp(1.0) * t) *
          std::exp(-delta * delta * delta * static_cast<double>(spec.d0) / 8));
}

void BandCheckSpec::Validate() const {
  if (!(epsilon > 0 && epsilon < 1)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if (d0 < 1 || d0 > 2 * t) throw std::invalid_argument("d0 must lie in 1..2t");
  if (horizon < t) throw std::invalid_argument("horizon must be >= t");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
}

bool BandCheckSpec::MatchesTheoremRegime() const {
  return epsilon <= 1.0 / 40 &&
         static_cast<double>(t) > std::pow(epsilon, -6.0);
}

BandCheckResult BandCheck(const BandCheckSpec& spec) {
  spec.Validate();
  const uint64_t steps = spec.horizon - spec.t;
  std::vector<double> lower(steps + 1), upper(steps + 1);
  for (uint64_t s = 0; s <= steps; ++s) {
    const double scale =
        std::sqrt(static_cast<double>(spec.t + s) / static_cast<double>(spec.t)) *
        static_cast<double>(spec.d0);
    lower[s] = (1 - spec.epsilon) * scale;
    upper[s] = (1 + spec.epsilon) * scale;
  }
  const std::vector<Flag> inside =
      RunIndexed(spec.trials, spec.jobs, [&](uint64_t i) -> Flag {
        Rng rng = MakeRng(DeriveSeed(spec.seed, i));
        uint64_t d = spec.d0;
        for (uint64_t s = 0; s <= steps; ++s) {
          const uint64_t j = spec.t + s;
          if (s > 0 && UniformBelow(rng, 2 * j - 1) < d) ++d;
          const double x = static_cast<double>(d);
          if (!(lower[s] < x && x < upper[s])) return 0;
        }
        return 1;
      });
  BandCheckResult result;
  result.in_band = CountFlags(inside);
  const double eps = spec.epsilon;
  const double t = static_cast<double>(spec.t);
  const double theorem_bound =
      2 * std::log(2 * std::exp(1.0) * t) * std::pow(eps, -6.0) *
      std::exp(-std::pow(eps, 15.0) * 1e-24 * static_cast<double>(spec.d0));
  result.report = MonteCarloReport(
      "band_check(t=" + std::to_string(spec.t) + ",eps=" + std::to_string(eps) +
          ",d0=" + std::to_string(spec.d0) +
          ",horizon=" + std::to_string(spec.horizon) + ")",
      spec.trials - result.in_band, spec.trials, theorem_bound);
  result.report.note =
      "bound reported only; verdict comes from the trend across d0";
  if (!spec.MatchesTheoremRegime()) {
    result.report.note += "; relaxed: outside epsilon <= 1/40, t > epsilon^-6";
  }
  result.in_band_ci = WilsonInterval(result.in_band, spec.trials);
  return result;
}

bool BandTrendIncreasing(const std::vector<BandCheckResult>& results) {
  for (size_t i = 1; i < results.size(); ++i) {
    const BandCheckResult& prev = results[i - 1];
    const BandCheckResult& cur = results[i];
    if (!(cur.in_band_fraction() > prev.in_band_fraction())) return false;
    if (cur.in_band_ci.Overlaps(prev.in_band_ci)) return false;
  }
  return true;
}

double MeanOracle(uint64_t n) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  double log_mean = 0;
  for (uint64_t j = 0; j < n; ++j) {
    log_mean += std::log1p(1.0 / static_cast<double>(2 * j + 1));
  }
  return std::exp(log_mean);
}

SampleMean MonteCarloFirstVertexMean(uint64_t n, uint64_t trials,
                                     uint64_t seed, int jobs) {
  if (trials < 2) throw std::invalid_argument("trials must be >= 2");
  const std::vector<uint64_t> degrees =
      RunIndexed(trials, jobs, [&](uint64_t i) -> uint64_t {
        return Generate(n, {1, DeriveSeed(seed, i)}).degree(1);
      });
  double sum = 0, sum_sq = 0;
  for (uint64_t d : degrees) {
    sum += static_cast<double>(d);
    sum_sq += static_cast<double>(d) * static_cast<double>(d);
  }
  const double count = static_cast<double>(trials);
  const double mean = sum / count;
  const double variance = (sum_sq - count * mean * mean) / (count - 1);
  return {mean, std::sqrt(variance / count), trials};
}

}  // namespace palab

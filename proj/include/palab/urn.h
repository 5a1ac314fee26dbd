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

#ifndef PALAB_URN_H_
#define PALAB_URN_H_

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "palab/exact_dist.h"
#include "palab/exact_pmf.h"

namespace palab {

// Replacement matrix [alpha, beta, gamma, delta]: drawing color A adds alpha
// A-balls and beta B-balls, drawing color B adds gamma and delta.
struct ReplacementMatrix {
  int64_t alpha = 0;
  int64_t beta = 0;
  int64_t gamma = 0;
  int64_t delta = 0;

  bool balanced() const { return alpha + beta == gamma + delta; }
  // Only meaningful for balanced matrices.
  int64_t balance() const { return alpha + beta; }
  bool triangular() const { return gamma == 0; }
  bool additive() const {
    return alpha >= 0 && beta >= 0 && gamma >= 0 && delta >= 0;
  }
  std::string ToString() const;

  friend bool operator==(const ReplacementMatrix&,
                         const ReplacementMatrix&) = default;
};

inline constexpr ReplacementMatrix kDegreeUrn{1, 1, 0, 2};
inline constexpr ReplacementMatrix kPolyaUrn{2, 0, 0, 2};

struct UrnSpec {
  ReplacementMatrix matrix;
  int64_t a0 = 0;
  int64_t b0 = 0;

  // Throws std::invalid_argument unless a0, b0 >= 0 and a0 + b0 >= 1.
  void Validate() const;
};

struct UrnState {
  int64_t a = 0;
  int64_t b = 0;
};

// Law of A_n, the number of A-balls after n draws.
struct UrnPmf {
  UrnSpec spec;
  uint64_t n = 0;
  ExactPmf law;
};

// One trajectory of n draws. Throws UnsupportedError for matrices with
// negative entries.
UrnState Simulate(const UrnSpec& spec, uint64_t n, uint64_t seed);

// Exact law of A_n for balanced additive urns, stepped one draw at a time.
class ExactUrnEnumerator {
 public:
  explicit ExactUrnEnumerator(const UrnSpec& spec);
  void Step();
  uint64_t steps() const { return steps_; }
  const ExactPmf& law() const { return law_; }

 private:
  UrnSpec spec_;
  uint64_t steps_ = 0;
  ExactPmf law_;
  std::vector<mpz_class> scratch_;
};

inline constexpr uint64_t kEnumerateCap = 5000;

// Throws UnsupportedError for unbalanced or subtractive urns and
// std::invalid_argument for n > kEnumerateCap.
UrnPmf EnumerateExact(const UrnSpec& spec, uint64_t n);

// Closed forms. Every function takes the number of draws n; exact variants
// return rationals, the others evaluate in log-Gamma space. Values outside
// the support are 0.

// ([1,1,0,2], 1, 0): P[A_n = k] = (k-1)/n 2^{k-1} C(2n-k, n-1) / C(2n, n).
mpq_class EasyCasePmfExact(uint64_t n, int64_t k);
double EasyCasePmf(uint64_t n, int64_t k);

// ([1,1,0,2], a0, 0): P[A_n = a0 + k_offset].
mpq_class ArbitraryA0PmfExact(uint64_t n, int64_t a0, int64_t k_offset);
double ArbitraryA0Pmf(uint64_t n, int64_t a0, int64_t k_offset);

// Balanced triangular urn [alpha, sigma - alpha, 0, sigma] with alpha >= 1:
// P[A_n = a0 + k * alpha] by the alternating sum. Exact arithmetic only; the
// mode overload throws UnsupportedError in float mode.
mpq_class GeneralTriangularPmfExact(const UrnSpec& spec, uint64_t n,
                                    int64_t k);
mpq_class GeneralTriangularPmf(const UrnSpec& spec, uint64_t n, int64_t k,
                               ArithmeticMode mode);

// ([2,0,0,2], a0, b0): P[A_n = a0 + 2k]. b0 = 0 (or a0 = 0) is taken as the
// limit of the formula, i.e. the urn never draws the absent color.
mpq_class Polya2002PmfExact(uint64_t n, int64_t a0, int64_t b0, int64_t k);
double Polya2002Pmf(uint64_t n, int64_t a0, int64_t b0, int64_t k);

// ([1,1,0,2], a0, b0): P[A_n = a0 + k_offset] as a sum of non-negative
// summands. Throws InternalError if a summand is negative beyond a relative
// tolerance of 1e-12.
mpq_class NonalternatingPmfExact(uint64_t n, int64_t a0, int64_t b0,
                                 int64_t k_offset);
double NonalternatingPmf(uint64_t n, int64_t a0, int64_t b0,
                         int64_t k_offset);
// The individual summands i = 0..n, each including the common prefactor.
std::vector<mpq_class> NonalternatingSummandsExact(uint64_t n, int64_t a0,
                                                   int64_t b0,
                                                   int64_t k_offset);

// P[d_1^n(v_t) = k]: the degree urn ([1,1,0,2], 1, 2t - 2) after n - t + 1
// draws.
mpq_class DegreePmfExact(uint64_t n, uint64_t t, int64_t k);
double DegreePmf(uint64_t n, uint64_t t, int64_t k);

// P[D(n) = k | D(t) = d] for 1 <= d <= 2t: the degree urn
// ([1,1,0,2], d, 2t + 1 - d) after n - t draws. The 2t + 1 balls are the 2t
// degree units at time t plus the stub of vertex t + 1.
mpq_class ConditionalDegreePmfExact(uint64_t n, uint64_t t, uint64_t d,
                                    int64_t k);
double ConditionalDegreePmf(uint64_t n, uint64_t t, uint64_t d, int64_t k);

// CSV "k,probability" preceded by a comment line recording the urn.
void WriteUrnPmfCsv(std::ostream& out, const UrnSpec& spec, uint64_t n,
                    const std::string& mode,
                    const std::vector<std::pair<int64_t, std::string>>& rows);

}  // namespace palab

#endif  // PALAB_URN_H_

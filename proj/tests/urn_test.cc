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

#include "palab/urn.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "oracles.h"
#include "palab/errors.h"
#include "palab/exact_dist.h"
#include "palab/rng.h"

namespace palab {
namespace {

mpq_class Q(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

TEST(ReplacementMatrixTest, Classification) {
  EXPECT_TRUE(kDegreeUrn.balanced());
  EXPECT_TRUE(kDegreeUrn.triangular());
  EXPECT_EQ(kDegreeUrn.balance(), 2);
  EXPECT_FALSE((ReplacementMatrix{1, 2, 0, 2}).balanced());
  EXPECT_FALSE((ReplacementMatrix{-1, 3, 0, 2}).additive());
  EXPECT_EQ(kPolyaUrn.ToString(), "[2,0,0,2]");
}

TEST(UrnSpecTest, RejectsEmptyUrn) {
  EXPECT_THROW((UrnSpec{kDegreeUrn, 0, 0}).Validate(), std::invalid_argument);
  EXPECT_THROW((UrnSpec{kDegreeUrn, -1, 3}).Validate(), std::invalid_argument);
}

TEST(SimulateTest, ForcedFirstDraw) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const UrnState s = Simulate({kDegreeUrn, 1, 0}, 1, seed);
    EXPECT_EQ(s.a, 2);
    EXPECT_EQ(s.b, 1);
  }
}

TEST(SimulateTest, PolyaParityAndBalance) {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const UrnState s = Simulate({kPolyaUrn, 3, 4}, 40, seed);
    EXPECT_EQ(s.a % 2, 1);
    EXPECT_EQ(s.a + s.b, 3 + 4 + 2 * 40);
  }
}

TEST(SimulateTest, RejectsSubtractiveUrn) {
  EXPECT_THROW(Simulate({{-1, 3, 0, 2}, 2, 2}, 3, 0), UnsupportedError);
}

TEST(SimulateTest, FrequenciesMatchEnumeration) {
  constexpr uint64_t kTrials = 100000;
  const UrnSpec spec{kDegreeUrn, 1, 0};
  const UrnPmf pmf = EnumerateExact(spec, 50);
  std::map<int64_t, uint64_t> counts;
  for (uint64_t i = 0; i < kTrials; ++i) {
    ++counts[Simulate(spec, 50, DeriveSeed(8, i)).a];
  }
  for (int64_t a = pmf.law.min_value(); a <= pmf.law.max_value(); ++a) {
    const double p = pmf.law.AtDouble(a);
    const double sd = std::sqrt(p * (1 - p) / kTrials);
    EXPECT_NEAR(static_cast<double>(counts[a]) / kTrials, p, 4 * sd + 1e-12)
        << a;
  }
}

TEST(EnumerateTest, SmallCasesAndOracle) {
  const UrnPmf two = EnumerateExact({kDegreeUrn, 1, 0}, 2);
  EXPECT_EQ(two.law.At(2), Q(1, 3));
  EXPECT_EQ(two.law.At(3), Q(2, 3));
  EXPECT_EQ(EnumerateExact({kDegreeUrn, 4, 1}, 0).law.At(4), 1);
  for (const ReplacementMatrix m :
       {kDegreeUrn, kPolyaUrn, ReplacementMatrix{2, 1, 0, 3},
        ReplacementMatrix{1, 2, 2, 1}, ReplacementMatrix{0, 3, 1, 2}}) {
    const UrnPmf pmf = EnumerateExact({m, 2, 3}, 9);
    for (const auto& [a, p] :
         testing::UrnByStates(m.alpha, m.beta, m.gamma, m.delta, 2, 3, 9)) {
      EXPECT_EQ(pmf.law.At(a), p) << m.ToString() << " a=" << a;
    }
  }
}

TEST(EnumerateTest, RejectsUnbalancedAndCap) {
  EXPECT_THROW(EnumerateExact({{1, 2, 0, 2}, 1, 1}, 3), UnsupportedError);
  EXPECT_THROW(EnumerateExact({kDegreeUrn, 1, 0}, kEnumerateCap + 1),
               std::invalid_argument);
}

TEST(EasyCaseTest, Examples) {
  EXPECT_EQ(EasyCasePmfExact(1, 2), 1);
  EXPECT_EQ(EasyCasePmfExact(2, 3), Q(2, 3));
  EXPECT_EQ(EasyCasePmfExact(2, 2), Q(1, 3));
  EXPECT_EQ(EasyCasePmfExact(7, 1), 0);
  EXPECT_EQ(EasyCasePmfExact(7, 9), 0);
  EXPECT_NEAR(EasyCasePmf(2, 3), 2.0 / 3, 1e-14);
}

TEST(EasyCaseTest, FloatNormalizesAtLargeN) {
  double total = 0;
  for (int64_t k = 2; k <= 10001; ++k) total += EasyCasePmf(10000, k);
  EXPECT_NEAR(total, 1, 1e-9);
}

TEST(ArbitraryA0Test, ReducesToEasyCaseAndMatchesEnumeration) {
  for (uint64_t n = 1; n <= 25; ++n) {
    for (int64_t k = 0; k <= static_cast<int64_t>(n); ++k) {
      EXPECT_EQ(ArbitraryA0PmfExact(n, 1, k), EasyCasePmfExact(n, 1 + k));
    }
  }
  const UrnPmf pmf = EnumerateExact({kDegreeUrn, 2, 0}, 2);
  for (int64_t k = 0; k <= 2; ++k) {
    EXPECT_EQ(ArbitraryA0PmfExact(2, 2, k), pmf.law.At(2 + k));
  }
  EXPECT_EQ(ArbitraryA0PmfExact(0, 3, 0), 1);
}

TEST(ArbitraryA0Test, NormalizesUpTo100) {
  for (int64_t a0 : {1, 4, 9}) {
    for (uint64_t n : {1, 50, 100}) {
      mpq_class exact(0);
      double approx = 0;
      for (int64_t k = 0; k <= static_cast<int64_t>(n); ++k) {
        exact += ArbitraryA0PmfExact(n, a0, k);
        approx += ArbitraryA0Pmf(n, a0, k);
      }
      EXPECT_EQ(exact, 1);
      EXPECT_NEAR(approx, 1, 1e-9);
    }
  }
}

TEST(GeneralTriangularTest, MatchesPolyaAndEnumeration) {
  for (uint64_t n : {0, 1, 5, 30, 60}) {
    for (int64_t k = 0; k <= static_cast<int64_t>(n); ++k) {
      EXPECT_EQ(GeneralTriangularPmfExact({kPolyaUrn, 3, 2}, n, k),
                Polya2002PmfExact(n, 3, 2, k));
    }
  }
  const UrnSpec odd{{3, 2, 0, 5}, 2, 1};
  const UrnPmf pmf = EnumerateExact(odd, 12);
  for (int64_t k = 0; k <= 12; ++k) {
    EXPECT_EQ(GeneralTriangularPmfExact(odd, 12, k), pmf.law.At(2 + 3 * k));
  }
  EXPECT_EQ(GeneralTriangularPmfExact({kDegreeUrn, 1, 0}, 0, 0), 1);
  EXPECT_EQ(GeneralTriangularPmfExact({kDegreeUrn, 1, 0}, 0, 1), 0);
}

TEST(GeneralTriangularTest, FloatModeUnsupported) {
  EXPECT_THROW(GeneralTriangularPmf({kDegreeUrn, 1, 0}, 5, 1,
                                    ArithmeticMode::Float()),
               UnsupportedError);
  EXPECT_THROW(GeneralTriangularPmfExact({{1, 1, 1, 1}, 1, 1}, 5, 1),
               UnsupportedError);
}

TEST(PolyaTest, ExamplesAndEnumeration) {
  EXPECT_EQ(Polya2002PmfExact(1, 1, 1, 1), Q(1, 2));
  for (int64_t a0 = 1; a0 <= 4; ++a0) {
    for (int64_t b0 = 1; b0 <= 4; ++b0) {
      const UrnPmf pmf = EnumerateExact({kPolyaUrn, a0, b0}, 60);
      mpq_class total(0);
      for (int64_t k = 0; k <= 60; ++k) {
        const mpq_class p = Polya2002PmfExact(60, a0, b0, k);
        EXPECT_EQ(p, pmf.law.At(a0 + 2 * k));
        EXPECT_NEAR(Polya2002Pmf(60, a0, b0, k), p.get_d(),
                    1e-11 * p.get_d() + 1e-300);
        total += p;
      }
      EXPECT_EQ(total, 1);
    }
  }
}

TEST(NonalternatingTest, ReducesToArbitraryA0) {
  for (int64_t a0 : {1, 3}) {
    for (uint64_t n = 0; n <= 20; ++n) {
      for (int64_t k = 0; k <= static_cast<int64_t>(n); ++k) {
        EXPECT_EQ(NonalternatingPmfExact(n, a0, 0, k),
                  ArbitraryA0PmfExact(n, a0, k));
      }
    }
  }
}

TEST(NonalternatingTest, SplitUrnsIdentity) {
  for (int64_t a0 : {1, 2, 5}) {
    for (int64_t b0 : {0, 1, 4}) {
      const uint64_t n = 14;
      for (int64_t k = 1; k <= static_cast<int64_t>(n); ++k) {
        const auto summands = NonalternatingSummandsExact(n, a0, b0, k);
        for (uint64_t i = 0; i <= n; ++i) {
          EXPECT_EQ(summands[i], ArbitraryA0PmfExact(i, a0, k) *
                                     Polya2002PmfExact(n, a0, b0, i))
              << a0 << " " << b0 << " " << k << " " << i;
          EXPECT_GE(summands[i], 0);
        }
      }
    }
  }
}

TEST(NonalternatingTest, FloatAgreesAndNormalizesAt500) {
  for (uint64_t n : {3, 40}) {
    for (int64_t k = 0; k <= static_cast<int64_t>(n); ++k) {
      const double want = NonalternatingPmfExact(n, 5, 9, k).get_d();
      EXPECT_NEAR(NonalternatingPmf(n, 5, 9, k), want, 1e-10 * want + 1e-300);
    }
  }
  double total = 0;
  for (int64_t k = 0; k <= 500; ++k) total += NonalternatingPmf(500, 5, 9, k);
  EXPECT_NEAR(total, 1, 1e-8);
}

TEST(NonalternatingTest, RejectsBadStart) {
  EXPECT_THROW(NonalternatingPmfExact(3, 0, 2, 1), std::invalid_argument);
  EXPECT_THROW(NonalternatingPmf(3, 1, -2, 1), std::invalid_argument);
}

TEST(DegreePmfTest, MatchesDegreeRecursion) {
  EXPECT_EQ(DegreePmfExact(2, 1, 3), Q(2, 3));
  for (uint64_t n = 1; n <= 30; ++n) {
    for (uint64_t t = 1; t <= n; ++t) {
      const DegreeDistribution d = VertexDist(t, n, ArithmeticMode::Exact());
      for (int64_t k = 0; k <= static_cast<int64_t>(n) + 2; ++k) {
        EXPECT_EQ(DegreePmfExact(n, t, k), d.ExactProbability(k));
      }
    }
  }
  const DegreeDistribution big = VertexDist(7, 200, ArithmeticMode::Exact());
  for (int64_t k = 1; k <= 60; ++k) {
    EXPECT_EQ(DegreePmfExact(200, 7, k), big.ExactProbability(k));
  }
}

TEST(DegreePmfTest, ConditionalMatchesRecursion) {
  for (uint64_t t = 1; t <= 6; ++t) {
    for (uint64_t d = 1; d <= 2 * t; ++d) {
      EXPECT_EQ(ConditionalDegreePmfExact(t, t, d, d), 1);
      const DegreeDistribution dist =
          ConditionalDist(t, d, 25, ArithmeticMode::Exact());
      for (int64_t k = 0; k <= 40; ++k) {
        EXPECT_EQ(ConditionalDegreePmfExact(25, t, d, k),
                  dist.ExactProbability(k));
      }
    }
  }
  EXPECT_THROW(ConditionalDegreePmfExact(5, 2, 5, 3), std::invalid_argument);
}

TEST(DegreePmfTest, FloatTailAtLargeHorizon) {
  double tail = 0;
  for (int64_t k = 201; k <= 10001; ++k) tail += DegreePmf(10000, 1, k);
  EXPECT_NEAR(tail, std::exp(-1.0), 0.05 * std::exp(-1.0));
  EXPECT_LE(tail, std::exp(-1.0));
}

TEST(CsvTest, HeaderAndRows) {
  std::ostringstream out;
  WriteUrnPmfCsv(out, {kDegreeUrn, 1, 0}, 2, "exact", {{2, "1/3"}, {3, "2/3"}});
  EXPECT_EQ(out.str(),
            "# urn matrix=[1,1,0,2] a0=1 b0=0 n=2 mode=exact\n"
            "k,probability\n2,1/3\n3,2/3\n");
}

}  // namespace
}  // namespace palab

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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "oracles.h"
#include "palab/special.h"

namespace palab {
namespace {

const ArithmeticMode kExact = ArithmeticMode::Exact();
const ArithmeticMode kFloat = ArithmeticMode::Float();

mpq_class Q(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

TEST(ForwardDpTest, OneTransition) {
  const DegreeDistribution d =
      ForwardDp(DegreeDistribution::PointMass(1, 2, Arithmetic::kExactRational),
                2, kExact);
  EXPECT_EQ(d.ExactProbability(2), Q(1, 3));
  EXPECT_EQ(d.ExactProbability(3), Q(2, 3));
}

TEST(ForwardDpTest, IdentityAtSameTime) {
  const DegreeDistribution init =
      DegreeDistribution::PointMass(7, 5, Arithmetic::kExactRational);
  EXPECT_EQ(ForwardDp(init, 7, kExact).exact(), init.exact());
}

TEST(ForwardDpTest, RejectsImpossibleDegree) {
  EXPECT_THROW(
      ForwardDp(DegreeDistribution::PointMass(3, 7, Arithmetic::kExactRational),
                5, kExact),
      std::invalid_argument);
  EXPECT_THROW(
      ForwardDp(DegreeDistribution::PointMass(3, 2, Arithmetic::kExactRational),
                2, kExact),
      std::invalid_argument);
}

TEST(ForwardDpTest, MeanFollowsProduct) {
  for (uint64_t d : {1, 3, 6}) {
    const uint64_t t0 = 3;
    for (uint64_t n = t0; n <= t0 + 12; ++n) {
      mpq_class want(d);
      for (uint64_t t = t0 + 1; t <= n; ++t) want *= Q(2 * t, 2 * t - 1);
      EXPECT_EQ(MomentsExact(ConditionalDist(t0, d, n, kExact)).mean, want);
    }
  }
}

TEST(VertexDistTest, SmallCases) {
  EXPECT_EQ(VertexDist(1, 1, kExact).ExactProbability(2), 1);
  const DegreeDistribution d = VertexDist(1, 2, kExact);
  EXPECT_EQ(d.ExactProbability(2), Q(1, 3));
  EXPECT_EQ(d.ExactProbability(3), Q(2, 3));
  EXPECT_THROW(VertexDist(3, 2, kExact), std::invalid_argument);
}

TEST(VertexDistTest, SupportBound) {
  for (uint64_t n : {1, 5, 40}) {
    EXPECT_LE(VertexDist(1, n, kExact).support_max(), n + 1);
  }
}

TEST(VertexDistTest, MeanIdentity) {
  for (uint64_t n = 1; n <= 30; ++n) {
    mpz_class four_n;
    mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
    mpq_class want(four_n, Binomial(2 * n, n));
    want.canonicalize();
    EXPECT_EQ(MomentsExact(VertexDist(1, n, kExact)).mean, want) << n;
  }
}

TEST(ConditionalDistTest, AgreesWithBranchEnumeration) {
  // Condition v_1..v_t through the set-degree recurrence: D(n) | D(t) = d is
  // the law of a set with degree d at time t, so compare mixtures.
  const testing::BranchEnumerator oracle(10);
  for (uint64_t t = 1; t <= 4; ++t) {
    for (uint64_t n = t; n <= 10; ++n) {
      const std::vector<mpq_class> at_t = oracle.DegreeLaw(1, t);
      const std::vector<mpq_class> at_n = oracle.DegreeLaw(1, n);
      std::vector<mpq_class> mixture(16, mpq_class(0));
      for (uint64_t d = 1; d < at_t.size(); ++d) {
        if (at_t[d] == 0) continue;
        const DegreeDistribution c = ConditionalDist(t, d, n, kExact);
        for (uint64_t k = 0; k < 16; ++k) mixture[k] += at_t[d] * c.ExactProbability(k);
      }
      for (uint64_t k = 0; k < 16; ++k) EXPECT_EQ(mixture[k], at_n[k]);
    }
  }
}

TEST(ConditionalDistTest, PointMassAtSameTimeAndValidation) {
  EXPECT_EQ(ConditionalDist(9, 4, 9, kExact).ExactProbability(4), 1);
  EXPECT_THROW(ConditionalDist(2, 5, 4, kExact), std::invalid_argument);
  EXPECT_THROW(ConditionalDist(2, 0, 4, kExact), std::invalid_argument);
}

TEST(ConditionalDistTest, StochasticMonotonicityInD) {
  for (uint64_t d = 1; d < 20; ++d) {
    const DegreeDistribution lo = ConditionalDist(10, d, 80, kExact);
    const DegreeDistribution hi = ConditionalDist(10, d + 1, 80, kExact);
    for (double x = 0; x <= 90; x += 1) {
      EXPECT_LE(TailProbExact(lo, x), TailProbExact(hi, x));
    }
  }
}

TEST(TailProbTest, Edges) {
  const DegreeDistribution d = VertexDist(1, 2, kExact);
  EXPECT_EQ(TailProbExact(d, 2), Q(2, 3));
  EXPECT_EQ(TailProbExact(d, 1.5), 1);
  EXPECT_EQ(TailProbExact(d, 3), 0);
  EXPECT_DOUBLE_EQ(TailProb(VertexDist(1, 2, kFloat), 2), 2.0 / 3);
}

TEST(MomentsTest, PointMassAndSmallLaw) {
  const DistMoments m =
      Moments(DegreeDistribution::PointMass(4, 6, Arithmetic::kFloat));
  EXPECT_EQ(m.mean, 6);
  EXPECT_EQ(m.variance, 0);
  EXPECT_EQ(MomentsExact(VertexDist(1, 2, kExact)).mean, Q(8, 3));
}

TEST(FloatModeTest, AgreesWithExact) {
  for (uint64_t t : {1, 3, 20}) {
    const DegreeDistribution e = VertexDist(t, 400, kExact);
    const DegreeDistribution f = VertexDist(t, 400, kFloat);
    for (uint64_t x = e.support_min(); x <= e.support_max(); ++x) {
      const double want = e.Probability(x);
      if (want < 1e-250) continue;
      EXPECT_NEAR(f.Probability(x), want, 1e-8 * want) << t << " " << x;
    }
  }
}

TEST(FloatModeTest, NormalizedAtLargeHorizon) {
  const DegreeDistribution f = VertexDist(1, 10000, kFloat);
  double total = 0;
  for (uint64_t x = f.support_min(); x <= f.support_max(); ++x) {
    total += f.Probability(x);
  }
  EXPECT_NEAR(total, 1, 1e-9);
}

TEST(ExactModeTest, CapIsEnforced) {
  EXPECT_THROW(VertexDist(1, 50, ArithmeticMode::Exact(40)),
               std::invalid_argument);
}

TEST(CsvTest, ExactRationalsAsNumDen) {
  std::ostringstream out;
  WriteDistributionCsv(out, VertexDist(1, 2, kExact));
  EXPECT_EQ(out.str(), "degree,probability\n2,1/3\n3,2/3\n");
  std::ostringstream one;
  WriteDistributionCsv(one, VertexDist(1, 1, kExact));
  EXPECT_EQ(one.str(), "degree,probability\n2,1/1\n");
}

}  // namespace
}  // namespace palab

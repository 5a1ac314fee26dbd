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

#include "palab/pa_process.h"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "palab/errors.h"
#include "palab/rng.h"

namespace palab {
namespace {

uint64_t DegreeSum(const PaGraph& g) {
  return std::accumulate(g.degrees().begin(), g.degrees().end(), uint64_t{0});
}

TEST(GenerateTest, FirstVertexIsForcedSelfLoop) {
  for (uint64_t seed : {0, 1, 99}) {
    const PaGraph g = Generate(1, {1, seed});
    ASSERT_EQ(g.edges().size(), 1u);
    EXPECT_EQ(g.edges()[0], (Edge{1, 1}));
    EXPECT_EQ(g.degree(1), 2u);
  }
}

TEST(GenerateTest, SingleVertexWithTwoEdgesHasDegreeFour) {
  const PaGraph g = Generate(1, {2, 5});
  EXPECT_EQ(g.n(), 1u);
  EXPECT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.degree(1), 4u);
}

TEST(GenerateTest, RejectsZeroVertices) {
  EXPECT_THROW(Generate(0, {1, 0}), std::invalid_argument);
  EXPECT_THROW(Generate(3, {0, 0}), std::invalid_argument);
}

TEST(GenerateTest, HandshakeAndEdgeCount) {
  for (uint32_t m : {1u, 2u, 3u}) {
    for (uint64_t n : {1, 2, 17, 500}) {
      const PaGraph g = Generate(n, {m, n * 31 + m});
      EXPECT_EQ(g.edges().size(), m * n);
      EXPECT_EQ(DegreeSum(g), 2 * m * n);
    }
  }
}

TEST(GenerateTest, EdgeJTouchesVertexJAndEarlierVertex) {
  const PaGraph g = Generate(2000, {1, 4});
  for (uint64_t j = 0; j < g.edges().size(); ++j) {
    EXPECT_EQ(g.edges()[j].source, j + 1);
    EXPECT_LE(g.edges()[j].target, j + 1);
  }
}

TEST(GenerateTest, DegreesCountEndpoints) {
  const PaGraph g = Generate(300, {3, 8});
  std::vector<uint64_t> counted(g.n(), 0);
  for (const Edge& e : g.edges()) {
    ++counted[e.source - 1];
    ++counted[e.target - 1];
  }
  for (uint64_t v = 0; v < g.n(); ++v) EXPECT_EQ(counted[v], g.degrees()[v]);
}

TEST(GenerateTest, DeterministicPerSeed) {
  EXPECT_EQ(Generate(1000, {2, 42}), Generate(1000, {2, 42}));
  EXPECT_FALSE(Generate(1000, {2, 42}) == Generate(1000, {2, 43}));
}

TEST(GenerateTest, GeneralMIsMergedSingleEdgeProcess) {
  for (uint32_t m : {2u, 3u, 5u}) {
    EXPECT_EQ(Generate(400, {m, 7}), MergeToM(Generate(400 * m, {1, 7}), m));
  }
}

TEST(GenerateTest, SecondVertexAttachmentFrequency) {
  constexpr int kSeeds = 30000;
  int to_first = 0;
  for (int s = 0; s < kSeeds; ++s) {
    to_first += Generate(2, {1, DeriveSeed(1, s)}).edges()[1].target == 1;
  }
  const double p = static_cast<double>(to_first) / kSeeds;
  const double sd = std::sqrt(2.0 / 9 / kSeeds);
  EXPECT_NEAR(p, 2.0 / 3, 4 * sd);
}

// At t = 3 the six (target of v_2, target of v_3) outcomes have
// probabilities 2/3*{3/5, 1/5, 1/5} and 1/3*{2/5, 2/5, 1/5}.
TEST(GenerateTest, ChiSquareAtThirdStep) {
  constexpr uint64_t kSeeds = 100000;
  constexpr double kCritical = 20.515;  // chi^2, 5 dof, alpha = 0.001
  const std::array<double, 6> probability = {6.0 / 15, 2.0 / 15, 2.0 / 15,
                                             2.0 / 15, 2.0 / 15, 1.0 / 15};
  std::array<uint64_t, 6> observed{};
  for (uint64_t s = 0; s < kSeeds; ++s) {
    const PaGraph g = Generate(3, {1, DeriveSeed(2024, s)});
    const int first = g.edges()[1].target - 1;   // 0: v_1, 1: self-loop
    const int second = g.edges()[2].target - 1;  // 0, 1, 2
    ++observed[first * 3 + second];
  }
  double chi2 = 0;
  for (int i = 0; i < 6; ++i) {
    const double expected = probability[i] * kSeeds;
    chi2 += (observed[i] - expected) * (observed[i] - expected) / expected;
  }
  EXPECT_LT(chi2, kCritical);
}

TEST(StepTest, StepsReproduceGenerate) {
  PaGraph g = Generate(1, {1, 77});
  for (int i = 0; i < 100000; ++i) StepInPlace(g);
  EXPECT_EQ(g, Generate(100001, {1, 77}));
}

TEST(StepTest, FirstStepGivesDegreeSumFour) {
  const PaGraph g = Step(Generate(1, {1, 3}));
  EXPECT_EQ(g.n(), 2u);
  EXPECT_EQ(DegreeSum(g), 4u);
}

TEST(StepTest, RejectsMergedOrLoadedGraphs) {
  PaGraph merged = Generate(4, {2, 0});
  EXPECT_THROW(StepInPlace(merged), UnsupportedError);
  PaGraph loaded = PaGraph::FromEdges(1, 1, {{1, 1}});
  EXPECT_FALSE(loaded.steppable());
  EXPECT_THROW(StepInPlace(loaded), UnsupportedError);
}

TEST(MergeTest, TwoVerticesIntoOne) {
  const PaGraph g = MergeToM(Generate(2, {1, 9}), 2);
  EXPECT_EQ(g.n(), 1u);
  EXPECT_EQ(g.edges()[0], (Edge{1, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{1, 1}));
  EXPECT_EQ(g.degree(1), 4u);
}

TEST(MergeTest, IdentityAndDivisibility) {
  const PaGraph g = Generate(30, {1, 2});
  EXPECT_EQ(MergeToM(g, 1), g);
  EXPECT_THROW(MergeToM(g, 4), std::invalid_argument);
  EXPECT_EQ(DegreeSum(MergeToM(g, 3)), DegreeSum(g));
}

TEST(VertexSetTest, Validation) {
  EXPECT_THROW(VertexSet({}, 3), std::invalid_argument);
  EXPECT_THROW(VertexSet({1, 1}, 3), std::invalid_argument);
  EXPECT_THROW(VertexSet({4}, 3), std::invalid_argument);
  EXPECT_THROW(VertexSet({0}, 3), std::invalid_argument);
  const VertexSet s({3, 1}, 3);
  EXPECT_EQ(s.members()[0], 1u);
}

TEST(DegreeOfSetTest, SingletonAllAndAdditivity) {
  EXPECT_EQ(DegreeOfSet(Generate(1, {1, 0}), VertexSet::FirstVertices(1)), 2u);
  const PaGraph g = Generate(50, {2, 11});
  EXPECT_EQ(DegreeOfSet(g, VertexSet::FirstVertices(50)), 200u);
  const VertexSet a({1, 4, 9}, 10), b({2, 5}, 10), both({1, 2, 4, 5, 9}, 10);
  EXPECT_EQ(DegreeOfSet(g, both), DegreeOfSet(g, a) + DegreeOfSet(g, b));
  EXPECT_THROW(DegreeOfSet(Generate(5, {1, 0}), VertexSet({6}, 6)),
               std::invalid_argument);
}

TEST(TrajectoryTest, MatchesGeneratedGraphs) {
  const VertexSet s({1, 3}, 3);
  const std::vector<uint64_t> checkpoints = {3, 10, 11, 200};
  for (uint32_t m : {1u, 2u}) {
    const ProcessParams params{m, 5};
    const std::vector<uint64_t> traj = Trajectory(200, params, s, checkpoints);
    for (size_t i = 0; i < checkpoints.size(); ++i) {
      EXPECT_EQ(traj[i], DegreeOfSet(Generate(checkpoints[i], params), s));
    }
    EXPECT_LE(traj[2] - traj[1], 2u * m);
    EXPECT_LE(traj.back(), 2u * m * 200);
  }
}

TEST(TrajectoryTest, RejectsEarlyCheckpoint) {
  const std::vector<uint64_t> early = {2};
  EXPECT_THROW(Trajectory(10, {1, 0}, VertexSet({3}, 3), early),
               std::invalid_argument);
}

TEST(EdgeListTest, RoundTrip) {
  const PaGraph g = Generate(25, {2, 13});
  std::stringstream s;
  WriteEdgeList(s, g);
  EXPECT_EQ(s.str().substr(0, s.str().find('\n')), "# pa n=25 m=2 seed=13");
  EXPECT_EQ(ReadEdgeList(s), g);
}

TEST(EdgeListTest, RejectsBadEdges) {
  std::stringstream s("# pa n=2 m=1 seed=0\n1 1\n2 3\n");
  EXPECT_THROW(ReadEdgeList(s), std::invalid_argument);
}

}  // namespace
}  // namespace palab

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

#ifndef PALAB_CLIQUE_H_
#define PALAB_CLIQUE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "palab/pa_process.h"
#include "palab/stats.h"

namespace palab {

// Unordered principal pair stored as (smaller id, larger id).
using PrincipalPair = std::pair<VertexId, VertexId>;

inline PrincipalPair MakePair(VertexId a, VertexId b) {
  return a < b ? PrincipalPair{a, b} : PrincipalPair{b, a};
}

// Certificate of a one-subdivided clique: k principal vertices and one
// private connector per principal pair.
struct Witness {
  std::vector<VertexId> principals;
  std::map<PrincipalPair, VertexId> connectors;

  uint32_t k() const { return static_cast<uint32_t>(principals.size()); }
  // Restriction to the first `k` principals.
  Witness Prefix(uint32_t k) const;

  friend bool operator==(const Witness&, const Witness&) = default;
};

nlohmann::json WitnessToJson(const Witness& w);
// Throws std::invalid_argument on malformed input.
Witness WitnessFromJson(const nlohmann::json& j);

enum class FinderMode { kPaperFaithful, kGreedy };

struct FinderConfig {
  uint32_t k = 1;
  FinderMode mode = FinderMode::kPaperFaithful;
  // Principals come from v_1..v_{t1}; 0 selects k^2.
  uint64_t t1 = 0;
  // Degrees are compared at time t2; 0 selects k^4.
  uint64_t t2 = 0;
  bool strict_first_edges = true;

  uint64_t ResolvedT1() const;
  uint64_t ResolvedT2() const;
  // Throws std::invalid_argument unless k >= 1, k <= t1 <= t2 <= n.
  void Validate(uint64_t n) const;
};

// Splits v_1..v_{t1} into k consecutive blocks of t1/k vertices and returns
// the maximum-degree member of each block (lowest id on ties). `degrees[i]`
// is the degree of v_{i+1} at the selection time.
std::vector<VertexId> SelectPrincipals(std::span<const Degree> degrees,
                                       uint32_t k, uint64_t t1);

struct RunStats {
  std::vector<VertexId> principals;
  // Arrival time of the connector of each connected pair.
  std::map<PrincipalPair, uint64_t> connection_time;
  // Times t2, 2 t2, 4 t2, ... reached by the run, and the principal degrees
  // at each of them (same order as principals).
  std::vector<uint64_t> checkpoints;
  std::vector<std::vector<Degree>> principal_degrees;
  // Last time simulated: when the witness completed, else the horizon.
  uint64_t stop_time = 0;
};

nlohmann::json RunStatsToJson(const RunStats& stats);

struct FinderResult {
  std::optional<Witness> witness;
  RunStats stats;
  // G_m at stats.stop_time.
  PaGraph graph;
};

// Runs G_m up to time n and looks for a witness on k principals. Paper-
// faithful mode selects principals at t2 and takes each later vertex as the
// connector of the first unconnected pair it joins (with strict_first_edges,
// only through its first two edges, first edge to one principal and second
// to the other); it stops as soon as every pair is connected. Greedy mode
// runs GreedyMaxWitness on G_m^n and succeeds if it reaches size k.
FinderResult FindWitnessOnline(uint64_t n, uint32_t m, const FinderConfig& cfg,
                               uint64_t seed);

// Sorted, deduplicated neighbour lists of a graph (self-loops dropped).
class AdjacencyIndex {
 public:
  explicit AdjacencyIndex(const PaGraph& g);

  uint64_t n() const { return offsets_.size() - 1; }
  bool Adjacent(VertexId u, VertexId v) const;
  std::span<const VertexId> Neighbors(VertexId v) const;

 private:
  std::vector<uint64_t> offsets_;
  std::vector<VertexId> neighbors_;
};

struct WitnessVerdict {
  bool valid = false;
  std::string diagnostic;  // empty when valid
};

// Throws std::invalid_argument if any id exceeds g.n().
WitnessVerdict VerifyWitness(const PaGraph& g, const Witness& w);
WitnessVerdict VerifyWitness(const AdjacencyIndex& index, const Witness& w);

// Principals are the k highest-degree vertices (lowest id on ties);
// connectors are matched greedily in id order to the lexicographically
// smallest unconnected pair they cover. k starts at an upper bound and
// decreases until every pair is connected.
Witness GreedyMaxWitness(const PaGraph& g);
Witness GreedyMaxWitness(const PaGraph& g, const AdjacencyIndex& index);

struct SuccessEstimate {
  uint64_t successes = 0;
  uint64_t trials = 0;
  Interval ci;

  double probability() const {
    return static_cast<double>(successes) / static_cast<double>(trials);
  }
};

nlohmann::json ToJson(const SuccessEstimate& e);

// Fraction of paper-faithful runs (default t1, t2, strict first edges) that
// find a witness on k principals by time n; run i uses DeriveSeed(seed, i).
SuccessEstimate SuccessProbability(uint64_t n, uint32_t m, uint32_t k,
                                   uint64_t trials, uint64_t seed, int jobs);

}  // namespace palab

#endif  // PALAB_CLIQUE_H_

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

#ifndef PALAB_PA_PROCESS_H_
#define PALAB_PA_PROCESS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "palab/rng.h"

namespace palab {

// Vertex ids are 1-based: v_1, ..., v_n.
using VertexId = uint32_t;
using Degree = uint32_t;

struct ProcessParams {
  uint32_t m = 1;  // edges per new vertex
  uint64_t seed = 0;
};

// One edge of the process. `source` is the vertex whose arrival created the
// edge and `target` the vertex it attached to (equal for a self-loop).
struct Edge {
  VertexId source = 0;
  VertexId target = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// The multigraph G_m^n. Edge j (0-based) of the m = 1 process is created by
// vertex j + 1; for m > 1 the edges of merged vertex i are the m consecutive
// edges starting at index (i - 1) * m, in creation order.
class PaGraph {
 public:
  // Builds a graph from an explicit edge list, e.g. one read from disk.
  // Throws std::invalid_argument if an endpoint lies outside 1..n or the
  // edge count is not m * n.
  static PaGraph FromEdges(uint64_t n, uint32_t m, std::vector<Edge> edges,
                           uint64_t seed = 0);

  uint64_t n() const { return degrees_.size(); }
  uint32_t m() const { return m_; }
  uint64_t seed() const { return seed_; }
  std::span<const Edge> edges() const { return edges_; }
  // degrees()[i] is the degree of v_{i+1}.
  std::span<const Degree> degrees() const { return degrees_; }
  Degree degree(VertexId v) const;

  // True for m = 1 graphs that still carry their generator stream.
  bool steppable() const { return rng_.has_value(); }

  friend bool operator==(const PaGraph& a, const PaGraph& b) {
    return a.m_ == b.m_ && a.edges_ == b.edges_ && a.degrees_ == b.degrees_;
  }

 private:
  friend PaGraph Generate(uint64_t, const ProcessParams&);
  friend void StepInPlace(PaGraph&);
  friend PaGraph MergeToM(const PaGraph&, uint32_t);

  PaGraph() = default;

  uint32_t m_ = 1;
  uint64_t seed_ = 0;
  std::vector<Edge> edges_;
  std::vector<Degree> degrees_;
  std::optional<Rng> rng_;
};

// G_m^n. For m = 1 each new vertex v_t attaches to v_s (s < t) with
// probability d(v_s) / (2t - 1) and forms a self-loop with probability
// 1 / (2t - 1). For m > 1 the result is MergeToM(Generate(m * n, {1, seed}), m).
PaGraph Generate(uint64_t n, const ProcessParams& params);

// Adds one vertex to a steppable m = 1 graph, advancing its stream.
// Throws UnsupportedError for any other graph.
void StepInPlace(PaGraph& g);
PaGraph Step(PaGraph g);

// Merges blocks {v_{(i-1)m+1}, ..., v_{im}} of an m = 1 graph into vertex i.
PaGraph MergeToM(const PaGraph& g1, uint32_t m);

// A set of vertices fixed at time t0 (all members <= t0).
class VertexSet {
 public:
  // Throws std::invalid_argument if `members` is empty, has duplicates or
  // contains an id outside 1..t0.
  VertexSet(std::vector<VertexId> members, uint64_t t0);

  // {v_1, ..., v_k} fixed at time k.
  static VertexSet FirstVertices(uint64_t k);

  std::span<const VertexId> members() const { return members_; }
  uint64_t t0() const { return t0_; }

 private:
  std::vector<VertexId> members_;  // sorted
  uint64_t t0_;
};

uint64_t DegreeOfSet(const PaGraph& g, const VertexSet& s);

// Total degree of `s` at each checkpoint along a single run of the process
// with `params` up to time n (no graph is materialized).
std::vector<uint64_t> Trajectory(uint64_t n, const ProcessParams& params,
                                 const VertexSet& s,
                                 std::span<const uint64_t> checkpoints);

// Edge-list text format: header "# pa n=<n> m=<m> seed=<seed>" followed by
// one "u v" line per edge.
void WriteEdgeList(std::ostream& out, const PaGraph& g);
PaGraph ReadEdgeList(std::istream& in);

}  // namespace palab

#endif  // PALAB_PA_PROCESS_H_

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

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "palab/errors.h"

namespace palab {

PaGraph PaGraph::FromEdges(uint64_t n, uint32_t m, std::vector<Edge> edges,
                           uint64_t seed) {
  if (n == 0 || m == 0) throw std::invalid_argument("n and m must be >= 1");
  if (edges.size() != n * m) {
    throw std::invalid_argument("edge count " + std::to_string(edges.size()) +
                                " != m*n = " + std::to_string(n * m));
  }
  PaGraph g;
  g.m_ = m;
  g.seed_ = seed;
  g.degrees_.assign(n, 0);
  for (const Edge& e : edges) {
    if (e.source < 1 || e.source > n || e.target < 1 || e.target > n) {
      throw std::invalid_argument("edge endpoint outside 1.." +
                                  std::to_string(n));
    }
    ++g.degrees_[e.source - 1];
    ++g.degrees_[e.target - 1];
  }
  g.edges_ = std::move(edges);
  return g;
}

Degree PaGraph::degree(VertexId v) const {
  if (v < 1 || v > degrees_.size()) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " outside 1.." +
                                std::to_string(degrees_.size()));
  }
  return degrees_[v - 1];
}

void StepInPlace(PaGraph& g) {
  if (g.m_ != 1 || !g.rng_) {
    throw UnsupportedError(
        "step requires an m = 1 graph produced by Generate; general m only "
        "through MergeToM");
  }
  const auto t = static_cast<VertexId>(g.degrees_.size() + 1);
  // Slots 0 .. 2t-3 are the endpoints of the existing edges, slot 2t-2 is
  // the stub of the new vertex itself.
  const uint64_t slot = UniformBelow(*g.rng_, 2 * uint64_t{t} - 1);
  VertexId target = t;
  if (slot + 1 < 2 * uint64_t{t} - 1) {
    const Edge& e = g.edges_[slot / 2];
    target = (slot % 2 == 0) ? e.source : e.target;
  }
  g.edges_.push_back({t, target});
  g.degrees_.push_back(1);
  ++g.degrees_[target - 1];
}

PaGraph Step(PaGraph g) {
  StepInPlace(g);
  return g;
}

PaGraph Generate(uint64_t n, const ProcessParams& params) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  if (params.m == 0) throw std::invalid_argument("m must be >= 1");
  if (params.m > 1) {
    return MergeToM(Generate(n * params.m, {1, params.seed}), params.m);
  }
  PaGraph g;
  g.m_ = 1;
  g.seed_ = params.seed;
  g.rng_ = MakeRng(params.seed);
  g.edges_.reserve(n);
  g.degrees_.reserve(n);
  // G_1^1 is forced: a single vertex with a self-loop.
  g.edges_.push_back({1, 1});
  g.degrees_.push_back(2);
  for (uint64_t t = 2; t <= n; ++t) StepInPlace(g);
  return g;
}

PaGraph MergeToM(const PaGraph& g1, uint32_t m) {
  if (m == 0) throw std::invalid_argument("m must be >= 1");
  if (g1.m() != 1) throw std::invalid_argument("MergeToM expects an m = 1 graph");
  if (g1.n() % m != 0) {
    throw std::invalid_argument("vertex count " + std::to_string(g1.n()) +
                                " not divisible by m = " + std::to_string(m));
  }
  if (m == 1) return g1;
  auto block = [m](VertexId v) { return static_cast<VertexId>((v - 1) / m + 1); };
  PaGraph g;
  g.m_ = m;
  g.seed_ = g1.seed();
  g.edges_.reserve(g1.edges().size());
  for (const Edge& e : g1.edges()) {
    g.edges_.push_back({block(e.source), block(e.target)});
  }
  g.degrees_.assign(g1.n() / m, 0);
  for (uint64_t v = 0; v < g1.n(); ++v) g.degrees_[v / m] += g1.degrees()[v];
  return g;
}

VertexSet::VertexSet(std::vector<VertexId> members, uint64_t t0)
    : members_(std::move(members)), t0_(t0) {
  if (members_.empty()) throw std::invalid_argument("vertex set is empty");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("vertex set has duplicate members");
  }
  if (members_.front() < 1 || members_.back() > t0_) {
    throw std::invalid_argument("vertex set members must lie in 1..t0 = " +
                                std::to_string(t0_));
  }
}

VertexSet VertexSet::FirstVertices(uint64_t k) {
  std::vector<VertexId> members(k);
  for (uint64_t i = 0; i < k; ++i) members[i] = static_cast<VertexId>(i + 1);
  return VertexSet(std::move(members), k);
}

uint64_t DegreeOfSet(const PaGraph& g, const VertexSet& s) {
  uint64_t total = 0;
  for (VertexId v : s.members()) total += g.degree(v);
  return total;
}

std::vector<uint64_t> Trajectory(uint64_t n, const ProcessParams& params,
                                 const VertexSet& s,
                                 std::span<const uint64_t> checkpoints) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  if (params.m == 0) throw std::invalid_argument("m must be >= 1");
  if (s.t0() > n) throw std::invalid_argument("set fixed after horizon n");
  for (size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < s.t0()) {
      throw std::invalid_argument("checkpoint " +
                                  std::to_string(checkpoints[i]) +
                                  " precedes t0 = " + std::to_string(s.t0()));
    }
    if (checkpoints[i] > n) {
      throw std::invalid_argument("checkpoint beyond horizon n");
    }
    if (i > 0 && checkpoints[i] < checkpoints[i - 1]) {
      throw std::invalid_argument("checkpoints must be ascending");
    }
  }
  const uint32_t m = params.m;
  // Run the m = 1 process and track the merged set through its blocks.
  PaGraph g = Generate(m * s.t0(), {1, params.seed});
  const uint64_t fixed_until = m * s.t0();
  std::vector<uint8_t> in_set(fixed_until + 1, 0);
  uint64_t total = 0;
  for (VertexId v : s.members()) {
    for (uint64_t j = 0; j < m; ++j) {
      const uint64_t w = (uint64_t{v} - 1) * m + j + 1;
      in_set[w] = 1;
      total += g.degrees()[w - 1];
    }
  }
  std::vector<uint64_t> out;
  out.reserve(checkpoints.size());
  uint64_t time = s.t0();
  for (uint64_t checkpoint : checkpoints) {
    for (; time < checkpoint; ++time) {
      for (uint32_t j = 0; j < m; ++j) {
        StepInPlace(g);
        const VertexId target = g.edges().back().target;
        if (target <= fixed_until && in_set[target]) ++total;
      }
    }
    out.push_back(total);
  }
  return out;
}

void WriteEdgeList(std::ostream& out, const PaGraph& g) {
  out << "# pa n=" << g.n() << " m=" << g.m() << " seed=" << g.seed() << '\n';
  for (const Edge& e : g.edges()) out << e.source << ' ' << e.target << '\n';
}

PaGraph ReadEdgeList(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty edge list");
  uint64_t n = 0, m = 0, seed = 0;
  {
    std::istringstream header(line);
    std::string hash, tag, field;
    header >> hash >> tag;
    if (hash != "#" || tag != "pa") {
      throw std::invalid_argument("edge list header must start with '# pa'");
    }
    while (header >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = field.substr(0, eq);
      const uint64_t value = std::stoull(field.substr(eq + 1));
      if (key == "n") n = value;
      else if (key == "m") m = value;
      else if (key == "seed") seed = value;
    }
  }
  std::vector<Edge> edges;
  edges.reserve(n * m);
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    uint64_t u = 0, v = 0;
    if (!(row >> u >> v)) {
      throw std::invalid_argument("malformed edge line: " + line);
    }
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  return PaGraph::FromEdges(n, static_cast<uint32_t>(m), std::move(edges), seed);
}

}  // namespace palab

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

#include "palab/clique.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "palab/parallel.h"
#include "palab/rng.h"

namespace palab {
namespace {

std::string PairString(const PrincipalPair& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

VertexId BlockOf(VertexId v, uint32_t m) {
  return static_cast<VertexId>((v - 1) / m + 1);
}

std::vector<PrincipalPair> AllPairs(const std::vector<VertexId>& principals) {
  std::vector<VertexId> sorted = principals;
  std::sort(sorted.begin(), sorted.end());
  std::vector<PrincipalPair> pairs;
  for (size_t a = 0; a < sorted.size(); ++a) {
    for (size_t b = a + 1; b < sorted.size(); ++b) {
      pairs.emplace_back(sorted[a], sorted[b]);
    }
  }
  return pairs;
}

// Degrees of the merged vertices 1..count of an m = 1 graph.
std::vector<Degree> MergedDegrees(const PaGraph& g1, uint32_t m,
                                  uint64_t count) {
  std::vector<Degree> out(count, 0);
  for (uint64_t v = 0; v < count * m; ++v) out[v / m] += g1.degrees()[v];
  return out;
}

std::vector<Degree> PrincipalDegrees(const PaGraph& g1, uint32_t m,
                                     const std::vector<VertexId>& principals) {
  std::vector<Degree> out;
  out.reserve(principals.size());
  for (VertexId p : principals) {
    Degree d = 0;
    for (uint64_t j = 0; j < m; ++j) d += g1.degrees()[(p - 1) * m + j];
    out.push_back(d);
  }
  return out;
}

// Greedy matching for fixed principals; returns true if every pair got a
// connector.
bool MatchConnectors(const AdjacencyIndex& index,
                     const std::vector<VertexId>& principals, Witness& out) {
  out.principals = principals;
  out.connectors.clear();
  const size_t pair_count = principals.size() * (principals.size() - 1) / 2;
  if (pair_count == 0) return true;
  std::vector<char> is_principal(index.n() + 1, 0);
  for (VertexId p : principals) is_principal[p] = 1;
  std::vector<VertexId> hits;
  for (VertexId v = 1; v <= index.n(); ++v) {
    if (is_principal[v]) continue;
    hits.clear();
    for (VertexId u : index.Neighbors(v)) {
      if (is_principal[u]) hits.push_back(u);
    }
    if (hits.size() < 2) continue;
    // Neighbour lists are sorted, so pairs come out in lexicographic order.
    bool assigned = false;
    for (size_t a = 0; a < hits.size() && !assigned; ++a) {
      for (size_t b = a + 1; b < hits.size() && !assigned; ++b) {
        auto [it, inserted] = out.connectors.try_emplace({hits[a], hits[b]}, v);
        assigned = inserted;
      }
    }
    if (out.connectors.size() == pair_count) return true;
  }
  return false;
}

}  // namespace

Witness Witness::Prefix(uint32_t k) const {
  if (k > principals.size()) {
    throw std::invalid_argument("prefix larger than the witness");
  }
  Witness out;
  out.principals.assign(principals.begin(), principals.begin() + k);
  for (const PrincipalPair& p : AllPairs(out.principals)) {
    out.connectors[p] = connectors.at(p);
  }
  return out;
}

nlohmann::json WitnessToJson(const Witness& w) {
  nlohmann::json connectors = nlohmann::json::array();
  for (const auto& [pair, vertex] : w.connectors) {
    connectors.push_back(
        {{"pair", {pair.first, pair.second}}, {"vertex", vertex}});
  }
  return {{"k", w.k()}, {"principals", w.principals},
          {"connectors", connectors}};
}

Witness WitnessFromJson(const nlohmann::json& j) {
  try {
    Witness w;
    w.principals = j.at("principals").get<std::vector<VertexId>>();
    if (j.contains("k") && j.at("k").get<uint32_t>() != w.k()) {
      throw std::invalid_argument("witness k does not match principal count");
    }
    for (const auto& c : j.at("connectors")) {
      const auto pair = c.at("pair").get<std::vector<VertexId>>();
      if (pair.size() != 2) throw std::invalid_argument("pair needs two ids");
      w.connectors[MakePair(pair[0], pair[1])] = c.at("vertex").get<VertexId>();
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed witness JSON: ") +
                                e.what());
  }
}

uint64_t FinderConfig::ResolvedT1() const {
  return t1 != 0 ? t1 : uint64_t{k} * k;
}

uint64_t FinderConfig::ResolvedT2() const {
  if (t2 != 0) return t2;
  const uint64_t k2 = uint64_t{k} * k;
  return k2 * k2;
}

void FinderConfig::Validate(uint64_t n) const {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const uint64_t r1 = ResolvedT1();
  const uint64_t r2 = ResolvedT2();
  if (r1 < k) throw std::invalid_argument("t1 must be >= k");
  if (r1 > r2) throw std::invalid_argument("need t1 <= t2");
  if (r2 > n) {
    throw std::invalid_argument("need t2 <= n (t2 = " + std::to_string(r2) +
                                ", n = " + std::to_string(n) + ")");
  }
}

std::vector<VertexId> SelectPrincipals(std::span<const Degree> degrees,
                                       uint32_t k, uint64_t t1) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (t1 < k) throw std::invalid_argument("t1 must be >= k");
  if (t1 > degrees.size()) {
    throw std::invalid_argument("selection needs at least t1 vertices");
  }
  const uint64_t block = t1 / k;
  std::vector<VertexId> out;
  out.reserve(k);
  for (uint64_t b = 0; b < k; ++b) {
    uint64_t best = b * block;
    for (uint64_t i = b * block + 1; i < (b + 1) * block; ++i) {
      if (degrees[i] > degrees[best]) best = i;
    }
    out.push_back(static_cast<VertexId>(best + 1));
  }
  return out;
}

nlohmann::json RunStatsToJson(const RunStats& stats) {
  nlohmann::json times = nlohmann::json::array();
  for (const auto& [pair, time] : stats.connection_time) {
    times.push_back({{"pair", {pair.first, pair.second}}, {"time", time}});
  }
  nlohmann::json trajectory = nlohmann::json::array();
  for (size_t i = 0; i < stats.checkpoints.size(); ++i) {
    trajectory.push_back({{"time", stats.checkpoints[i]},
                          {"degrees", stats.principal_degrees[i]}});
  }
  return {{"principals", stats.principals},
          {"connection_times", times},
          {"principal_degrees", trajectory},
          {"stop_time", stats.stop_time}};
}

FinderResult FindWitnessOnline(uint64_t n, uint32_t m, const FinderConfig& cfg,
                               uint64_t seed) {
  cfg.Validate(n);
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (cfg.mode == FinderMode::kGreedy) {
    PaGraph g = Generate(n, {m, seed});
    const Witness best = GreedyMaxWitness(g);
    RunStats stats;
    stats.stop_time = n;
    std::optional<Witness> w;
    if (best.k() >= cfg.k) {
      w = best.Prefix(cfg.k);
      stats.principals = w->principals;
    }
    return {std::move(w), std::move(stats), std::move(g)};
  }
  if (m < 2) {
    throw std::invalid_argument("paper-faithful mode requires m >= 2");
  }
  const uint64_t t2 = cfg.ResolvedT2();
  PaGraph g1 = Generate(t2 * m, {1, seed});

  RunStats stats;
  stats.principals =
      SelectPrincipals(MergedDegrees(g1, m, t2), cfg.k, cfg.ResolvedT1());
  const std::vector<PrincipalPair> pairs = AllPairs(stats.principals);
  stats.checkpoints.push_back(t2);
  stats.principal_degrees.push_back(PrincipalDegrees(g1, m, stats.principals));
  uint64_t next_checkpoint = 2 * t2;

  Witness w;
  w.principals = stats.principals;
  auto is_principal = [&](VertexId v) {
    return std::find(w.principals.begin(), w.principals.end(), v) !=
           w.principals.end();
  };
  std::vector<VertexId> hits;
  uint64_t time = t2;
  while (w.connectors.size() < pairs.size() && time < n) {
    ++time;
    for (uint32_t j = 0; j < m; ++j) StepInPlace(g1);
    const auto edges = g1.edges().subspan((time - 1) * m, m);
    hits.clear();
    if (cfg.strict_first_edges) {
      const VertexId first = BlockOf(edges[0].target, m);
      const VertexId second = BlockOf(edges[1].target, m);
      if (first != second && is_principal(first) && is_principal(second)) {
        hits = {first, second};
      }
    } else {
      for (const Edge& e : edges) {
        const VertexId target = BlockOf(e.target, m);
        if (is_principal(target) &&
            std::find(hits.begin(), hits.end(), target) == hits.end()) {
          hits.push_back(target);
        }
      }
      std::sort(hits.begin(), hits.end());
    }
    bool assigned = false;
    for (size_t a = 0; a < hits.size() && !assigned; ++a) {
      for (size_t b = a + 1; b < hits.size() && !assigned; ++b) {
        const PrincipalPair p = MakePair(hits[a], hits[b]);
        assigned = w.connectors.try_emplace(p, static_cast<VertexId>(time)).second;
        if (assigned) stats.connection_time[p] = time;
      }
    }
    if (time == next_checkpoint) {
      stats.checkpoints.push_back(time);
      stats.principal_degrees.push_back(
          PrincipalDegrees(g1, m, stats.principals));
      next_checkpoint *= 2;
    }
  }
  stats.stop_time = time;
  std::optional<Witness> found;
  if (w.connectors.size() == pairs.size()) found = std::move(w);
  return {std::move(found), std::move(stats), MergeToM(g1, m)};
}

AdjacencyIndex::AdjacencyIndex(const PaGraph& g) {
  const uint64_t n = g.n();
  std::vector<uint64_t> counts(n + 2, 0);
  for (const Edge& e : g.edges()) {
    if (e.source == e.target) continue;
    ++counts[e.source + 1];
    ++counts[e.target + 1];
  }
  std::partial_sum(counts.begin(), counts.end(), counts.begin());
  std::vector<VertexId> flat(counts[n + 1]);
  std::vector<uint64_t> fill(counts.begin(), counts.end() - 1);
  for (const Edge& e : g.edges()) {
    if (e.source == e.target) continue;
    flat[fill[e.source]++] = e.target;
    flat[fill[e.target]++] = e.source;
  }
  offsets_.assign(1, 0);
  offsets_.reserve(n + 1);
  neighbors_.reserve(flat.size());
  for (uint64_t v = 1; v <= n; ++v) {
    auto first = flat.begin() + static_cast<std::ptrdiff_t>(counts[v]);
    auto last = flat.begin() + static_cast<std::ptrdiff_t>(counts[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    neighbors_.insert(neighbors_.end(), first, last);
    offsets_.push_back(neighbors_.size());
  }
}

std::span<const VertexId> AdjacencyIndex::Neighbors(VertexId v) const {
  if (v < 1 || v > n()) throw std::invalid_argument("vertex out of range");
  return std::span<const VertexId>(neighbors_)
      .subspan(offsets_[v - 1], offsets_[v] - offsets_[v - 1]);
}

bool AdjacencyIndex::Adjacent(VertexId u, VertexId v) const {
  const auto list = Neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

WitnessVerdict VerifyWitness(const PaGraph& g, const Witness& w) {
  return VerifyWitness(AdjacencyIndex(g), w);
}

WitnessVerdict VerifyWitness(const AdjacencyIndex& index, const Witness& w) {
  auto check_id = [&](VertexId v) {
    if (v < 1 || v > index.n()) {
      throw std::invalid_argument("vertex id " + std::to_string(v) +
                                  " outside 1.." + std::to_string(index.n()));
    }
  };
  for (VertexId p : w.principals) check_id(p);
  for (const auto& [pair, c] : w.connectors) {
    check_id(pair.first);
    check_id(pair.second);
    check_id(c);
  }

  std::vector<VertexId> sorted = w.principals;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return {false, "duplicate principal"};
  }
  const std::vector<PrincipalPair> pairs = AllPairs(w.principals);
  for (const auto& [pair, c] : w.connectors) {
    if (!std::binary_search(pairs.begin(), pairs.end(), pair)) {
      return {false, "pair " + PairString(pair) + " is not a principal pair"};
    }
  }
  std::map<VertexId, PrincipalPair> used;
  for (const PrincipalPair& pair : pairs) {
    const auto it = w.connectors.find(pair);
    if (it == w.connectors.end()) {
      return {false, "missing connector for pair " + PairString(pair)};
    }
    const VertexId c = it->second;
    if (std::binary_search(sorted.begin(), sorted.end(), c)) {
      return {false, "connector " + std::to_string(c) + " of pair " +
                         PairString(pair) + " is a principal"};
    }
    const auto [prev, fresh] = used.emplace(c, pair);
    if (!fresh) {
      return {false, "connector reuse: vertex " + std::to_string(c) +
                         " serves pairs " + PairString(prev->second) +
                         " and " + PairString(pair)};
    }
    if (!index.Adjacent(c, pair.first) || !index.Adjacent(c, pair.second)) {
      return {false, "connector " + std::to_string(c) +
                         " is not adjacent to both ends of pair " +
                         PairString(pair)};
    }
  }
  return {true, ""};
}

Witness GreedyMaxWitness(const PaGraph& g) {
  return GreedyMaxWitness(g, AdjacencyIndex(g));
}

Witness GreedyMaxWitness(const PaGraph& g, const AdjacencyIndex& index) {
  const uint64_t n = g.n();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{1});
  const auto degrees = g.degrees();
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return degrees[a - 1] > degrees[b - 1];
  });
  // Necessary conditions for k principals: each has k - 1 distinct
  // neighbours, and at least C(k, 2) non-principals see two principals.
  std::vector<uint32_t> seen(n + 1, 0);
  std::vector<char> is_principal(n + 1, 0);
  uint64_t two_hit = 0;  // non-principals adjacent to >= 2 principals
  uint64_t k = 1;
  for (uint64_t size = 1; size <= n; ++size) {
    const VertexId p = order[size - 1];
    if (index.Neighbors(p).size() + 1 < size) break;
    is_principal[p] = 1;
    if (seen[p] >= 2) --two_hit;
    for (VertexId u : index.Neighbors(p)) {
      if (++seen[u] == 2 && !is_principal[u]) ++two_hit;
    }
    if (two_hit >= size * (size - 1) / 2) k = size;
  }
  Witness w;
  for (; k >= 2; --k) {
    std::vector<VertexId> principals(order.begin(), order.begin() + k);
    if (MatchConnectors(index, principals, w)) return w;
  }
  w.principals = {order[0]};
  w.connectors.clear();
  return w;
}

nlohmann::json ToJson(const SuccessEstimate& e) {
  return {{"successes", e.successes},
          {"trials", e.trials},
          {"probability", e.probability()},
          {"ci_lo", e.ci.lo},
          {"ci_hi", e.ci.hi}};
}

SuccessEstimate SuccessProbability(uint64_t n, uint32_t m, uint32_t k,
                                   uint64_t trials, uint64_t seed, int jobs) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  FinderConfig cfg;
  cfg.k = k;
  cfg.Validate(n);
  const std::vector<unsigned char> found =
      RunIndexed(trials, jobs, [&](uint64_t i) -> unsigned char {
        return FindWitnessOnline(n, m, cfg, DeriveSeed(seed, i))
            .witness.has_value();
      });
  SuccessEstimate e;
  e.trials = trials;
  for (unsigned char f : found) e.successes += f;
  e.ci = WilsonInterval(e.successes, trials);
  return e;
}

}  // namespace palab

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

// Command-line front end: graph generation, degree laws, urn formulas, bound
// checks, clique witnesses and figure data. Every command that writes a file
// also writes <file>.manifest.json describing how to reproduce it.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "palab/bounds.h"
#include "palab/clique.h"
#include "palab/errors.h"
#include "palab/exact_dist.h"
#include "palab/figure.h"
#include "palab/pa_process.h"
#include "palab/urn.h"

#ifndef PALAB_VERSION
#define PALAB_VERSION "dev"
#endif

namespace {

using nlohmann::json;
using palab::ArithmeticMode;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitVerdict = 3;

struct Common {
  uint64_t seed = 0;
  int jobs = 0;
  bool strict = false;
  std::string out;
};

// Destination of a command's main artifact: a file, or stdout when empty.
class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (!path_.empty()) {
      file_.open(path_);
      if (!file_) throw std::runtime_error("cannot open output file " + path_);
    }
  }
  std::ostream& stream() { return path_.empty() ? std::cout : file_; }
  void Close() {
    if (path_.empty()) return;
    file_.close();
    if (!file_) throw std::runtime_error("failed writing " + path_);
  }

 private:
  std::string path_;
  std::ofstream file_;
};

std::string Rational(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string ShortestDouble(double x) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s.precision(17);
  s << x;
  return s.str();
}

ArithmeticMode ParseMode(const std::string& mode, uint64_t cap) {
  if (mode == "exact") return ArithmeticMode::Exact(cap);
  if (mode == "float") return ArithmeticMode::Float();
  throw std::invalid_argument("mode must be 'exact' or 'float'");
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file " + path);
  return in;
}

void WriteManifest(const std::string& command, const CLI::App& sub,
                   const Common& common, std::vector<std::string> argv,
                   const std::vector<std::string>& artifacts) {
  if (artifacts.empty()) return;
  // Pin a seed taken from the environment so replay does not depend on it.
  bool has_seed = false;
  for (const std::string& arg : argv) {
    has_seed = has_seed || arg == "--seed" || arg.rfind("--seed=", 0) == 0;
  }
  if (!has_seed) argv.push_back("--seed=" + std::to_string(common.seed));
  json params = json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0) continue;
    std::string joined;
    for (const std::string& r : opt->results()) {
      joined += (joined.empty() ? "" : ",") + r;
    }
    params[opt->get_name()] = joined;
  }
  const json manifest = {{"command", command},
                         {"parameters", params},
                         {"seed", common.seed},
                         {"artifacts", artifacts},
                         {"tool_version", PALAB_VERSION},
                         {"argv", argv}};
  const std::string path = artifacts.front() + ".manifest.json";
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest " + path);
  out << manifest.dump(2) << '\n';
}

void AddCommon(CLI::App* sub, Common& common, bool with_jobs) {
  sub->add_option("--seed", common.seed, "master seed")
      ->envname("PA_LAB_SEED");
  sub->add_option("--out", common.out, "output path (default stdout)");
  sub->add_flag("--strict", common.strict,
                "exit with status 3 when a verdict fails");
  if (with_jobs) {
    sub->add_option("--jobs", common.jobs,
                    "worker threads (0 = one per core)");
  }
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
  uint64_t n = 1;
  uint32_t m = 1;
};

int RunGen(const GenArgs& a, const Common& c, std::vector<std::string>& art) {
  const palab::PaGraph g = palab::Generate(a.n, {a.m, c.seed});
  Output out(c.out);
  palab::WriteEdgeList(out.stream(), g);
  out.Close();
  if (!c.out.empty()) art.push_back(c.out);
  return kExitOk;
}

// --- dist ------------------------------------------------------------------

struct DistArgs {
  uint64_t t = 1;
  uint64_t n = 1;
  uint64_t condition = 0;  // 0: unconditioned
  std::string mode = "exact";
  uint64_t cap = 2000;
};

int RunDist(const DistArgs& a, const Common& c, std::vector<std::string>& art) {
  const ArithmeticMode mode = ParseMode(a.mode, a.cap);
  const palab::DegreeDistribution dist =
      a.condition == 0 ? palab::VertexDist(a.t, a.n, mode)
                       : palab::ConditionalDist(a.t, a.condition, a.n, mode);
  Output out(c.out);
  palab::WriteDistributionCsv(out.stream(), dist);
  out.Close();
  if (!c.out.empty()) art.push_back(c.out);
  return kExitOk;
}

// --- urn -------------------------------------------------------------------

struct UrnArgs {
  std::string formula = "enumerate";
  std::vector<int64_t> matrix = {1, 1, 0, 2};
  int64_t a0 = 1;
  int64_t b0 = 0;
  uint64_t n = 1;
  std::string mode = "exact";
  uint64_t trials = 10000;
};

int RunUrn(const UrnArgs& a, const Common& c, std::vector<std::string>& art) {
  if (a.matrix.size() != 4) {
    throw std::invalid_argument("matrix needs four entries alpha,beta,gamma,delta");
  }
  palab::UrnSpec spec{{a.matrix[0], a.matrix[1], a.matrix[2], a.matrix[3]},
                      a.a0, a.b0};
  const bool exact = ParseMode(a.mode, palab::kEnumerateCap).kind ==
                     palab::Arithmetic::kExactRational;
  std::vector<std::pair<int64_t, std::string>> rows;
  auto emit = [&](int64_t balls, const mpq_class& q, double p) {
    if (exact ? sgn(q) != 0 : p != 0) {
      rows.emplace_back(balls, exact ? Rational(q) : ShortestDouble(p));
    }
  };
  const auto n = static_cast<int64_t>(a.n);
  const auto require_matrix = [&](const palab::ReplacementMatrix& want) {
    if (!(spec.matrix == want)) {
      throw std::invalid_argument("formula '" + a.formula +
                                  "' requires matrix " + want.ToString());
    }
  };
  if (a.formula == "enumerate") {
    const palab::UrnPmf pmf = palab::EnumerateExact(spec, a.n);
    for (int64_t v = pmf.law.min_value(); v <= pmf.law.max_value(); ++v) {
      const mpq_class q = pmf.law.At(v);
      emit(v, q, q.get_d());
    }
  } else if (a.formula == "easy-case") {
    require_matrix(palab::kDegreeUrn);
    if (a.a0 != 1 || a.b0 != 0) {
      throw std::invalid_argument("easy-case requires a0=1, b0=0");
    }
    for (int64_t k = 2; k <= n + 1; ++k) {
      if (exact) {
        emit(k, palab::EasyCasePmfExact(a.n, k), 0);
      } else {
        emit(k, 0, palab::EasyCasePmf(a.n, k));
      }
    }
  } else if (a.formula == "arbitrary-a0") {
    require_matrix(palab::kDegreeUrn);
    if (a.b0 != 0) throw std::invalid_argument("arbitrary-a0 requires b0=0");
    for (int64_t k = 0; k <= n; ++k) {
      if (exact) {
        emit(a.a0 + k, palab::ArbitraryA0PmfExact(a.n, a.a0, k), 0);
      } else {
        emit(a.a0 + k, 0, palab::ArbitraryA0Pmf(a.n, a.a0, k));
      }
    }
  } else if (a.formula == "general") {
    for (int64_t k = 0; k <= n; ++k) {
      emit(a.a0 + k * spec.matrix.alpha,
           palab::GeneralTriangularPmf(spec, a.n, k, ParseMode(a.mode, 0)), 0);
    }
  } else if (a.formula == "polya") {
    require_matrix(palab::kPolyaUrn);
    for (int64_t k = 0; k <= n; ++k) {
      if (exact) {
        emit(a.a0 + 2 * k, palab::Polya2002PmfExact(a.n, a.a0, a.b0, k), 0);
      } else {
        emit(a.a0 + 2 * k, 0, palab::Polya2002Pmf(a.n, a.a0, a.b0, k));
      }
    }
  } else if (a.formula == "nonalternating") {
    require_matrix(palab::kDegreeUrn);
    for (int64_t k = 0; k <= n; ++k) {
      if (exact) {
        emit(a.a0 + k, palab::NonalternatingPmfExact(a.n, a.a0, a.b0, k), 0);
      } else {
        emit(a.a0 + k, 0, palab::NonalternatingPmf(a.n, a.a0, a.b0, k));
      }
    }
  } else if (a.formula == "simulate") {
    if (a.trials < 1) throw std::invalid_argument("trials must be >= 1");
    std::map<int64_t, uint64_t> counts;
    for (uint64_t i = 0; i < a.trials; ++i) {
      ++counts[palab::Simulate(spec, a.n, palab::DeriveSeed(c.seed, i)).a];
    }
    for (const auto& [v, count] : counts) {
      mpq_class q(count, a.trials);
      q.canonicalize();
      rows.emplace_back(v, exact ? Rational(q) : ShortestDouble(q.get_d()));
    }
  } else {
    throw std::invalid_argument(
        "formula must be one of enumerate, easy-case, arbitrary-a0, general, "
        "polya, nonalternating, simulate");
  }
  Output out(c.out);
  palab::WriteUrnPmfCsv(out.stream(), spec, a.n, a.formula + "/" + a.mode,
                        rows);
  out.Close();
  if (!c.out.empty()) art.push_back(c.out);
  return kExitOk;
}

// --- bounds ----------------------------------------------------------------

struct BoundsArgs {
  std::string kind = "tail";
  double c = 2;
  uint64_t n = 10000;
  double epsilon = 0.1;
  uint64_t t = 5000;
  double delta = 0.1;
  std::vector<uint64_t> d0 = {2000};
  uint64_t horizon = 10000;
  uint64_t trials = 10000;
  std::string mode = "exact";
  uint64_t cap = 2000;
  std::string csv_out;
};

int RunBounds(const BoundsArgs& a, const Common& c,
              std::vector<std::string>& art) {
  std::vector<palab::BoundReport> reports;
  json extra = json::object();
  if (a.kind == "tail") {
    reports.push_back(palab::FirstVertexTail(a.c, a.n, ParseMode(a.mode, a.cap)));
  } else if (a.kind == "small-degree") {
    reports.push_back(
        palab::SmallDegreeProb(a.n, a.epsilon, ParseMode(a.mode, a.cap)));
  } else if (a.kind == "short-lower" || a.kind == "short-upper") {
    for (uint64_t d0 : a.d0) {
      const palab::ShortTermSpec spec{a.t, a.delta, d0, a.trials, c.seed,
                                      c.jobs};
      reports.push_back(a.kind == "short-lower" ? palab::ShortTermLower(spec)
                                                : palab::ShortTermUpper(spec));
    }
  } else if (a.kind == "band") {
    std::vector<palab::BandCheckResult> results;
    json fractions = json::array();
    for (uint64_t d0 : a.d0) {
      results.push_back(palab::BandCheck(
          {a.t, a.epsilon, d0, a.horizon, a.trials, c.seed, c.jobs}));
      reports.push_back(results.back().report);
      fractions.push_back({{"d0", d0},
                           {"in_band_fraction", results.back().in_band_fraction()},
                           {"ci_lo", results.back().in_band_ci.lo},
                           {"ci_hi", results.back().in_band_ci.hi}});
    }
    extra["in_band"] = fractions;
    if (results.size() > 1) {
      const bool trend = palab::BandTrendIncreasing(results);
      extra["trend_increasing"] = trend;
      // The band verdict is the trend; the theorem bound is informational.
      for (auto& r : reports) r.holds = trend;
    }
  } else if (a.kind == "mean") {
    extra["mean_oracle"] = palab::MeanOracle(a.n);
    if (a.trials >= 2) {
      const palab::SampleMean s =
          palab::MonteCarloFirstVertexMean(a.n, a.trials, c.seed, c.jobs);
      extra["sample_mean"] = s.mean;
      extra["standard_error"] = s.standard_error;
      extra["trials"] = s.trials;
    }
  } else {
    throw std::invalid_argument(
        "kind must be one of tail, small-degree, short-lower, short-upper, "
        "band, mean");
  }
  Output out(c.out);
  if (reports.size() == 1 && extra.empty()) {
    out.stream() << palab::ToJson(reports.front()).dump(2) << '\n';
  } else {
    json doc = json::object();
    json array = json::array();
    for (const auto& r : reports) array.push_back(palab::ToJson(r));
    doc["reports"] = array;
    doc.update(extra);
    out.stream() << doc.dump(2) << '\n';
  }
  out.Close();
  if (!c.out.empty()) art.push_back(c.out);
  if (!a.csv_out.empty()) {
    Output csv(a.csv_out);
    palab::WriteReportsCsv(csv.stream(), reports);
    csv.Close();
    art.push_back(a.csv_out);
  }
  bool all_hold = true;
  for (const auto& r : reports) all_hold = all_hold && r.holds;
  return (c.strict && !all_hold) ? kExitVerdict : kExitOk;
}

// --- clique ----------------------------------------------------------------

struct CliqueArgs {
  std::string action;
  uint32_t k = 2;
  uint32_t m = 2;
  uint64_t n = 100000;
  uint64_t t1 = 0;
  uint64_t t2 = 0;
  bool non_strict = false;
  std::string mode = "paper";
  std::string graph;
  std::string witness;
  std::string graph_out;
  uint64_t trials = 100;
};

int RunClique(const CliqueArgs& a, const Common& c,
              std::vector<std::string>& art) {
  json doc;
  bool verdict_ok = true;
  if (a.action == "find") {
    palab::FinderConfig cfg;
    cfg.k = a.k;
    cfg.t1 = a.t1;
    cfg.t2 = a.t2;
    cfg.strict_first_edges = !a.non_strict;
    if (a.mode == "greedy") {
      cfg.mode = palab::FinderMode::kGreedy;
    } else if (a.mode != "paper") {
      throw std::invalid_argument("mode must be 'paper' or 'greedy'");
    }
    const palab::FinderResult r = palab::FindWitnessOnline(a.n, a.m, cfg, c.seed);
    doc["found"] = r.witness.has_value();
    if (r.witness) {
      doc["witness"] = palab::WitnessToJson(*r.witness);
    } else {
      doc["message"] = "not found by horizon";
    }
    doc["stats"] = palab::RunStatsToJson(r.stats);
    if (!a.graph_out.empty()) {
      Output g(a.graph_out);
      palab::WriteEdgeList(g.stream(), r.graph);
      g.Close();
    }
  } else if (a.action == "verify") {
    if (a.graph.empty() || a.witness.empty()) {
      throw std::invalid_argument("verify needs --graph and --witness");
    }
    std::ifstream gin = OpenInput(a.graph);
    const palab::PaGraph g = palab::ReadEdgeList(gin);
    std::ifstream win = OpenInput(a.witness);
    json wj = json::parse(win);
    if (wj.contains("witness")) wj = wj.at("witness");
    const palab::WitnessVerdict v =
        palab::VerifyWitness(g, palab::WitnessFromJson(wj));
    doc = {{"valid", v.valid}, {"diagnostic", v.diagnostic}};
    verdict_ok = v.valid;
  } else if (a.action == "greedy") {
    std::unique_ptr<palab::PaGraph> g;
    if (!a.graph.empty()) {
      std::ifstream gin = OpenInput(a.graph);
      g = std::make_unique<palab::PaGraph>(palab::ReadEdgeList(gin));
    } else {
      g = std::make_unique<palab::PaGraph>(palab::Generate(a.n, {a.m, c.seed}));
    }
    doc["witness"] = palab::WitnessToJson(palab::GreedyMaxWitness(*g));
  } else if (a.action == "prob") {
    const palab::SuccessEstimate e =
        palab::SuccessProbability(a.n, a.m, a.k, a.trials, c.seed, c.jobs);
    doc = palab::ToJson(e);
  } else {
    throw std::invalid_argument("clique action must be find, verify, greedy or prob");
  }
  Output out(c.out);
  out.stream() << doc.dump(2) << '\n';
  out.Close();
  if (!c.out.empty()) art.push_back(c.out);
  if (!a.graph_out.empty()) art.push_back(a.graph_out);
  return (c.strict && !verdict_ok) ? kExitVerdict : kExitOk;
}

// --- figure ----------------------------------------------------------------

struct FigureArgs {
  std::string which = "left";
  uint64_t horizon = palab::kFigureHorizon;
};

int RunFigure(const FigureArgs& a, const Common& c,
              std::vector<std::string>& art) {
  const palab::FigureData data =
      palab::ComputeFigure(palab::ParseFigurePanel(a.which), a.horizon);
  Output out(c.out);
  palab::WriteFigureCsv(out.stream(), data);
  out.Close();
  if (!c.out.empty()) art.push_back(c.out);
  return kExitOk;
}

int Dispatch(std::vector<std::string> args);

// --- replay ----------------------------------------------------------------

int RunReplay(const std::string& manifest_path) {
  std::ifstream in = OpenInput(manifest_path);
  const json manifest = json::parse(in);
  return Dispatch(manifest.at("argv").get<std::vector<std::string>>());
}

int Dispatch(std::vector<std::string> args) {
  CLI::App app{"Preferential attachment laboratory", "pa_lab"};
  app.set_version_flag("--version", PALAB_VERSION);
  app.require_subcommand(1);

  Common common;
  GenArgs gen;
  DistArgs dist;
  UrnArgs urn;
  BoundsArgs bounds;
  CliqueArgs clique;
  FigureArgs figure;
  std::string manifest_path;

  auto* gen_cmd = app.add_subcommand("gen", "generate G_m^n as an edge list");
  gen_cmd->add_option("--n", gen.n, "number of vertices")->required();
  gen_cmd->add_option("--m", gen.m, "edges per vertex");
  AddCommon(gen_cmd, common, false);

  auto* dist_cmd = app.add_subcommand("dist", "degree law of v_t at time n");
  dist_cmd->add_option("--t", dist.t, "vertex index / conditioning time");
  dist_cmd->add_option("--n", dist.n, "horizon")->required();
  dist_cmd->add_option("--d", dist.condition, "condition on D(t) = d");
  dist_cmd->add_option("--mode", dist.mode, "exact or float");
  dist_cmd->add_option("--cap", dist.cap, "largest horizon in exact mode");
  AddCommon(dist_cmd, common, false);

  auto* urn_cmd = app.add_subcommand("urn", "urn laws and closed forms");
  urn_cmd->add_option("--formula", urn.formula,
                      "enumerate, easy-case, arbitrary-a0, general, polya, "
                      "nonalternating or simulate");
  urn_cmd->add_option("--matrix", urn.matrix, "alpha,beta,gamma,delta")
      ->delimiter(',');
  urn_cmd->add_option("--a0", urn.a0);
  urn_cmd->add_option("--b0", urn.b0);
  urn_cmd->add_option("--n", urn.n, "number of draws")->required();
  urn_cmd->add_option("--mode", urn.mode, "exact or float");
  urn_cmd->add_option("--trials", urn.trials, "runs for 'simulate'");
  AddCommon(urn_cmd, common, false);

  auto* bounds_cmd = app.add_subcommand("bounds", "tail and concentration checks");
  bounds_cmd->add_option("--kind", bounds.kind,
                         "tail, small-degree, short-lower, short-upper, band "
                         "or mean");
  bounds_cmd->add_option("--c", bounds.c);
  bounds_cmd->add_option("--n", bounds.n);
  bounds_cmd->add_option("--epsilon", bounds.epsilon);
  bounds_cmd->add_option("--t", bounds.t);
  bounds_cmd->add_option("--delta", bounds.delta);
  bounds_cmd->add_option("--d0", bounds.d0, "one or more start degrees")
      ->delimiter(',');
  bounds_cmd->add_option("--horizon", bounds.horizon);
  bounds_cmd->add_option("--trials", bounds.trials);
  bounds_cmd->add_option("--mode", bounds.mode, "exact or float");
  bounds_cmd->add_option("--cap", bounds.cap, "largest horizon of the exact recursion");
  bounds_cmd->add_option("--csv-out", bounds.csv_out, "CSV summary path");
  AddCommon(bounds_cmd, common, true);

  auto* clique_cmd = app.add_subcommand("clique", "one-subdivided clique witnesses");
  clique_cmd->add_option("action", clique.action, "find, verify, greedy or prob")
      ->required();
  clique_cmd->add_option("--k", clique.k);
  clique_cmd->add_option("--m", clique.m);
  clique_cmd->add_option("--n", clique.n);
  clique_cmd->add_option("--t1", clique.t1, "principal pool size (default k^2)");
  clique_cmd->add_option("--t2", clique.t2, "selection time (default k^4)");
  clique_cmd->add_flag("--non-strict", clique.non_strict,
                       "accept connectors through any two of their edges");
  clique_cmd->add_option("--mode", clique.mode, "paper or greedy");
  clique_cmd->add_option("--graph", clique.graph, "edge-list input");
  clique_cmd->add_option("--witness", clique.witness, "witness JSON input");
  clique_cmd->add_option("--graph-out", clique.graph_out,
                         "write the graph of a find run");
  clique_cmd->add_option("--trials", clique.trials);
  AddCommon(clique_cmd, common, true);

  auto* figure_cmd = app.add_subcommand("figure", "degree-law figure data");
  figure_cmd->add_option("--which", figure.which, "left or right");
  figure_cmd->add_option("--horizon", figure.horizon);
  AddCommon(figure_cmd, common, false);

  auto* replay_cmd = app.add_subcommand("replay", "re-run a manifest");
  replay_cmd->add_option("--manifest", manifest_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  std::vector<std::string> artifacts;
  int code = kExitOk;
  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    if (name == "gen") {
      code = RunGen(gen, common, artifacts);
    } else if (name == "dist") {
      code = RunDist(dist, common, artifacts);
    } else if (name == "urn") {
      code = RunUrn(urn, common, artifacts);
    } else if (name == "bounds") {
      code = RunBounds(bounds, common, artifacts);
    } else if (name == "clique") {
      code = RunClique(clique, common, artifacts);
    } else if (name == "figure") {
      code = RunFigure(figure, common, artifacts);
    } else {
      return RunReplay(manifest_path);
    }
    WriteManifest(name, *sub, common, args, artifacts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "pa_lab " << name << ": invalid argument: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const palab::UnsupportedError& e) {
    std::cerr << "pa_lab " << name << ": unsupported: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "pa_lab " << name << ": " << e.what() << '\n';
    return kExitInvalid;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return Dispatch(std::move(args));
}

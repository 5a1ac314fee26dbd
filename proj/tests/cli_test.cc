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

// Runs the pa_lab binary end to end.

#include <sys/wait.h>
#include <unistd.h>

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int status;
  std::string out;
};

RunResult RunCli(const std::string& args) {
  const std::string cmd = std::string(PALAB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int raw = pclose(pipe);
  return {WEXITSTATUS(raw), out};
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pa_lab_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenSingleVertex) {
  const RunResult r = RunCli("gen --n 1 --seed 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\n1 1\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, GenIsSeedDeterministic) {
  EXPECT_EQ(RunCli("gen --n 200 --m 2 --seed 5").out,
            RunCli("gen --n 200 --m 2 --seed 5").out);
  EXPECT_NE(RunCli("gen --n 200 --m 2 --seed 5").out,
            RunCli("gen --n 200 --m 2 --seed 6").out);
}

TEST_F(CliTest, DistExact) {
  const RunResult r = RunCli("dist --t 1 --n 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("2,1/3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("3,2/3"), std::string::npos) << r.out;
}

TEST_F(CliTest, InvalidInputExitsOne) {
  EXPECT_EQ(RunCli("dist --t 5 --n 2").status, 1);
  EXPECT_EQ(RunCli("urn --formula easy-case --matrix 1,0,0,2 --n 3").status, 1);
}

TEST_F(CliTest, UrnEasyCase) {
  const RunResult r =
      RunCli("urn --formula easy-case --matrix 1,1,0,2 --a0 1 --b0 0 --n 2");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("k,probability"), std::string::npos) << r.out;
}

TEST_F(CliTest, BoundsTailJsonAndStrict) {
  const RunResult r = RunCli("bounds --kind tail --c 2 --n 1000");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  const auto& rep = j.is_array() ? j.at(0) : j;
  EXPECT_TRUE(rep.at("holds").get<bool>());
  EXPECT_NEAR(rep.at("bound").get<double>(), 0.36787944117144233, 1e-15);
  EXPECT_EQ(RunCli("bounds --kind tail --c 0.5 --n 1000 --strict").status, 3);
  EXPECT_EQ(RunCli("bounds --kind tail --c 0.5 --n 1000").status, 0);
}

TEST_F(CliTest, FigureWritesManifestAndReplays) {
  const std::string out = Path("fig.csv");
  ASSERT_EQ(RunCli("figure --which right --horizon 200 --out " + out).status, 0);
  const std::string first = Slurp(out);
  EXPECT_EQ(first.rfind("degree,", 0), 0u) << first;
  const auto manifest =
      nlohmann::json::parse(Slurp(out + ".manifest.json"));
  EXPECT_EQ(manifest.at("command"), "figure");
  EXPECT_TRUE(manifest.contains("seed"));
  EXPECT_TRUE(manifest.contains("tool_version"));
  fs::remove(out);
  ASSERT_EQ(RunCli("replay --manifest " + out + ".manifest.json").status, 0);
  EXPECT_EQ(Slurp(out), first);
}

TEST_F(CliTest, CliqueFindThenVerify) {
  const std::string w = Path("w.json");
  const std::string g = Path("g.txt");
  const RunResult find = RunCli("clique find --k 2 --m 2 --n 20000 --seed 7 --out " +
                             w + " --graph-out " + g);
  ASSERT_EQ(find.status, 0) << find.out;
  const auto result = nlohmann::json::parse(Slurp(w));
  if (result.contains("witness") && result.at("witness").is_null()) {
    GTEST_SKIP() << "no witness for this seed";
  }
  const RunResult verify =
      RunCli("clique verify --graph " + g + " --witness " + w + " --strict");
  EXPECT_EQ(verify.status, 0) << verify.out;
}

TEST_F(CliTest, SeedFromEnvironment) {
  const std::string explicit_seed = RunCli("gen --n 50 --seed 11").out;
  ::setenv("PA_LAB_SEED", "11", 1);
  const std::string from_env = RunCli("gen --n 50").out;
  ::unsetenv("PA_LAB_SEED");
  EXPECT_EQ(from_env, explicit_seed);
}

}  // namespace

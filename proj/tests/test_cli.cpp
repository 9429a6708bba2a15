// Copyright 2026 The Hyperslice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + " " HYPERSLICE_CLI " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(Cli, CheckLeftRegular) {
  const CliRun r = run("check --expr \"inv(q1)*q2\" --n 2 --samples 100 --seed 7");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("LeftRegular"), std::string::npos) << r.out;
}

TEST(Cli, CheckNeitherFails) {
  const CliRun r = run("check --expr \"q2*q1*q3\" --n 3 --samples 30 --seed 7");
  EXPECT_EQ(r.status, 1) << r.out;
  EXPECT_NE(r.out.find("Neither"), std::string::npos) << r.out;
}

TEST(Cli, CheckJsonIsDeterministic) {
  const std::string args = "check --expr \"q1*q2 + conj(q1)\" --n 2 --samples 40 --seed 3 --json";
  const CliRun a = run(args);
  const CliRun b = run(args);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["schema"], "hyperslice.report/1");
  EXPECT_EQ(j["command"], "check");
  EXPECT_EQ(j["seed"], 3);
  EXPECT_FALSE(j.contains("wall_time_s"));
}

TEST(Cli, SeedFromEnvironment) {
  const CliRun a = run("check --expr \"q1^2\" --n 1 --samples 10 --json", "HYPERSLICE_SEED=41");
  ASSERT_EQ(a.status, 0) << a.out;
  EXPECT_EQ(nlohmann::json::parse(a.out)["seed"], 41);
  const CliRun b = run("check --expr \"q1^2\" --n 1 --samples 10 --json --seed 5", "HYPERSLICE_SEED=41");
  EXPECT_EQ(nlohmann::json::parse(b.out)["seed"], 5);
  EXPECT_EQ(run("check --expr q1 --n 1", "HYPERSLICE_SEED=abc").status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("check --expr \"q1 + * q2\" --n 2").status, 2);
  EXPECT_EQ(run("check --expr \"q3\" --n 2").status, 2);
  EXPECT_EQ(run("atlas --model nope").status, 2);
  EXPECT_EQ(run("det --file /nonexistent/matrix.json").status, 2);
  EXPECT_EQ(run("det --file " + write_temp("hs_bad.json", "[[1, 2], [3]]")).status, 2);
}

TEST(Cli, Grassmannian) {
  const CliRun r = run("atlas --model grassmann24 --samples 20 --classify-samples 20 --json");
  EXPECT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["results"]["counterexample"]["any_neither"].get<bool>());
  EXPECT_GT(j["results"]["counterexample"]["failing_residual"].get<double>(), 1e-2);
}

TEST(Cli, ProjectiveAtlas) {
  const CliRun r = run("atlas --model hp --dim 2 --samples 50 --classify-samples 10");
  EXPECT_EQ(r.status, 0) << r.out;
}

TEST(Cli, Determinant) {
  const std::string id = write_temp("hs_id.json", "{\"n\": 2, \"rows\": [[1, 0], [0, 1]]}");
  const CliRun r = run("det --file " + id + " --json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["results"]["dieudonne"], 1.0);
  EXPECT_EQ(j["results"]["det2"], 1.0);
}

TEST(Cli, InverseOfSingularFails) {
  const std::string s = write_temp("hs_sing.json", "[[1, 2], [2, 4]]");
  EXPECT_EQ(run("inv --file " + s).status, 1);
  const std::string m = write_temp("hs_inv.json", "[[[0,1,0,0], 1], [0, [0,0,1,0]]]");
  const CliRun r = run("inv --file " + m + " --json");
  ASSERT_EQ(r.status, 0);
  EXPECT_LT(nlohmann::json::parse(r.out)["results"]["residual"].get<double>(), 1e-12);
}

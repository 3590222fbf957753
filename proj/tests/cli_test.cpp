// Copyright 2026 The cayspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(const std::string& args) {
  const std::string err_path = ::testing::TempDir() + "/cayspec_cli_stderr.txt";
  const std::string cmd = std::string(CAYSPEC_CLI) + " " + args + " 2>" + err_path;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(err_path);
  std::stringstream ss;
  ss << err.rdbuf();
  r.err = ss.str();
  return r;
}

TEST(CliTest, VerifyJsonPasses) {
  const auto r = run("verify --group cyclic:5 --gens 1,4 --format json");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["n"], 5);
  for (const auto& c : j["checks"]) EXPECT_EQ(c["status"], "pass") << c["name"];
}

TEST(CliTest, ProofShowsEvenSubgroup) {
  const auto r = run("proof --group cyclic:6 --gens 1,5");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("H = {0,2,4}"), std::string::npos) << r.out;
  const auto j = run("proof --group cyclic:6 --gens 1,5 --format json");
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(nlohmann::json::parse(j.out)["proof_trace"]["subgroup"]["h"],
            nlohmann::json::parse("[0,2,4]"));
}

TEST(CliTest, NonGeneratingSetIsInputError) {
  const auto r = run("spectrum --group cyclic:6 --gens 2,4");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error: ", 0), 0u) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("spectrum --group cyclic:5 --bogus").code, 2);
  EXPECT_EQ(run("spectrum --gens 1,4").code, 2);  // --group missing
  EXPECT_EQ(run("spectrum --group cyclic:5 --gens 1,4 --format xml").code, 2);
  EXPECT_EQ(run("proof --group cyclic:5 --gens 1,4 --zeta nope").code, 2);
  EXPECT_EQ(run("spectrum --group torus:3").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(CliTest, ForcedZetaShowsBanner) {
  const auto r = run("proof --group cyclic:5 --gens 1,4 --zeta 0.5");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("OUT OF REGIME"), std::string::npos) << r.out;
}

TEST(CliTest, SubcommandsProduceOutput) {
  const auto s = run("spectrum --group cyclic:4 --gens ±1 --format json");
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(nlohmann::json::parse(s.out)["bipartite_spectral"], true);
  const auto c = run("cheeger --group cyclic:5 --gens 1,4 --format json");
  ASSERT_EQ(c.code, 0);
  const auto cj = nlohmann::json::parse(c.out);
  EXPECT_EQ(cj["h"]["num"], 1);
  EXPECT_EQ(cj["edge_h"]["den"], 2);
  const auto g = run("subgroups --group product:cyclic:2xcyclic:2xcyclic:2 --gens 1,2,4");
  ASSERT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("7 index-2 subgroup(s)"), std::string::npos) << g.out;
  EXPECT_NE(g.out.find("bipartite = yes"), std::string::npos);
  const auto big = run("cheeger --group cyclic:30 --gens ±1");
  ASSERT_EQ(big.code, 0);
  EXPECT_NE(big.out.find("skipped (max_exact=24)"), std::string::npos) << big.out;
}

TEST(CliTest, SweepFormatsAndOutFile) {
  const std::string path = ::testing::TempDir() + "/cayspec_sweep.csv";
  const auto r = run("sweep --family 'cyclic:3..6 gens=±1' --format csv --out " + path);
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("group,gens,n,d,h,", 0), 0u);
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 4);
  std::remove(path.c_str());

  const auto empty = run("sweep --format json");
  ASSERT_EQ(empty.code, 0);
  EXPECT_EQ(nlohmann::json::parse(empty.out)["count"], 0);

  const auto bad = run("sweep --family 'cyclic:6 gens=2,4' --format json");
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(nlohmann::json::parse(bad.out)["reports"][0].contains("error"));
}

TEST(CliTest, IdenticalInvocationsAreByteIdentical) {
  const std::string args = "sweep --family 'dihedral:3..5 gens=r,r^-1,s' --format json";
  const auto a = run(args);
  const auto b = run(args);
  const auto c = run(args + " --workers 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

}  // namespace

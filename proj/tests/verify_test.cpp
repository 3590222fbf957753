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

#include <cmath>
#include <numbers>

#include "cayspec/verify.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace cayspec {
namespace {

using testing_util::make_graph;

constexpr double kGamma2 = 294912.0;  // 2^9 * 2^6 * 3^2

TEST(VerifyTest, SpectralLowerBoundOnZ5) {
  const auto g = make_graph("cyclic:5", "1,4");
  const auto c = theorem_bound_check(g);
  ASSERT_EQ(c.status, CheckStatus::kPass);
  const double lambda_n = 1.0 - std::cos(4 * std::numbers::pi / 5);
  EXPECT_NEAR(*c.margin, 2.0 - 1.0 / kGamma2 - lambda_n, 1e-12);
  EXPECT_NEAR(*c.margin, 0.191, 1e-3);
}

TEST(VerifyTest, SpectralLowerBoundOnZ3) {
  const auto g = make_graph("cyclic:3", "1,2");
  const auto c = theorem_bound_check(g);
  ASSERT_EQ(c.status, CheckStatus::kPass);
  EXPECT_NEAR(*c.margin, 0.5 - 16.0 / kGamma2, 1e-12);
  const auto r = full_report(g, "cyclic:3", "1,2");
  ASSERT_TRUE(r.tightness);
  EXPECT_NEAR(*r.tightness, 9216.0, 1e-6);
}

TEST(VerifyTest, IntervalOnZ5AndZ3) {
  const auto z5 = abstract_interval_check(make_graph("cyclic:5", "1,4"));
  ASSERT_EQ(z5.status, CheckStatus::kPass);
  const double t2 = std::cos(2 * std::numbers::pi / 5);
  const double tn = std::cos(4 * std::numbers::pi / 5);
  EXPECT_NEAR(*z5.margin, std::min(0.875 - t2, tn + 1.0 - 1.0 / kGamma2), 1e-12);
  const auto z3 = abstract_interval_check(make_graph("cyclic:3", "1,2"));
  ASSERT_EQ(z3.status, CheckStatus::kPass);
  // t_2 = -1/2 against the upper end 1 - 4/8.
  EXPECT_EQ(z3.details.size(), 4u);
  EXPECT_NEAR(z3.details[3].second, 0.5 - (-0.5), 1e-12);
}

TEST(VerifyTest, BipartiteIsNotApplicable) {
  const auto g = make_graph("cyclic:6", "1,5");
  EXPECT_EQ(theorem_bound_check(g).status, CheckStatus::kNotApplicable);
  EXPECT_EQ(abstract_interval_check(g).status, CheckStatus::kNotApplicable);
  const auto r = full_report(g, "cyclic:6", "1,5");
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.bipartite_structural, true);
  EXPECT_FALSE(r.tightness);
  ASSERT_TRUE(r.proof && r.proof->subgroup);
  EXPECT_EQ(r.proof->subgroup->h, VertexSet(6, {0, 2, 4}));
}

TEST(VerifyTest, Z5ReportPassesEverything) {
  const auto r = full_report(make_graph("cyclic:5", "1,4"), "cyclic:5", "1,4");
  EXPECT_TRUE(r.all_pass());
  for (const auto& c : r.checks) EXPECT_EQ(c.status, CheckStatus::kPass) << c.name;
  EXPECT_EQ(*r.h, Rational(1));
  EXPECT_EQ(*r.edge_h, Rational(1, 2));
  EXPECT_EQ(*r.dual_h, Rational(4, 5));
  EXPECT_NEAR(*r.tightness, 56323.18, 0.01);
}

TEST(VerifyTest, DisconnectedInputIsRecordedNotThrown) {
  auto z6 = from_cyclic(6);
  const auto g = CayleyGraph::build(z6, GeneratingSet({2, 4}), false);
  const auto r = full_report(g, "cyclic:6", "2,4");
  EXPECT_FALSE(r.connected);
  EXPECT_FALSE(r.all_pass());
  ASSERT_NE(r.find("connectivity"), nullptr);
  EXPECT_EQ(r.find("connectivity")->status, CheckStatus::kFail);
  for (const auto& c : r.checks) {
    if (c.name == "connectivity") continue;
    EXPECT_EQ(c.status, CheckStatus::kSkipped) << c.name;
    EXPECT_EQ(c.reason, "disconnected");
  }
}

TEST(VerifyTest, CapsProduceSkipReasons) {
  const auto r = full_report(make_graph("cyclic:30", "±1"), "cyclic:30", "±1");
  EXPECT_TRUE(r.all_pass());
  EXPECT_FALSE(r.h);
  EXPECT_EQ(r.find("spectral_lower_bound")->status, CheckStatus::kSkipped);
  EXPECT_EQ(r.find("spectral_lower_bound")->reason, "max_exact=24");
  EXPECT_EQ(r.find("dual_cheeger_sandwich")->reason, "max_dual=14");
  EXPECT_EQ(r.find("square_spectrum")->status, CheckStatus::kPass);
}

TEST(SweepTest, CyclicRange) {
  const auto items = parse_sweep_items({"cyclic:3..16 gens=±1"});
  ASSERT_EQ(items.size(), 14u);
  const auto reports = sweep(items);
  ASSERT_EQ(reports.size(), 14u);
  for (const auto& r : reports) {
    ASSERT_TRUE(r.error.empty()) << r.group;
    EXPECT_EQ(*r.bipartite_structural, r.n % 2 == 0) << r.group;
    if (r.n % 2 == 1)
      EXPECT_EQ(r.find("spectral_lower_bound")->status, CheckStatus::kPass) << r.group;
    EXPECT_TRUE(r.all_pass()) << r.group;
  }
}

TEST(SweepTest, EmptyAndErrors) {
  EXPECT_TRUE(sweep({}).empty());
  const auto reports = sweep(parse_sweep_items({"cyclic:6 gens=2,4", "dihedral:3..6 gens=r,r^-1,s"}));
  ASSERT_EQ(reports.size(), 5u);
  EXPECT_FALSE(reports[0].error.empty());
  for (std::size_t i = 1; i < reports.size(); ++i) {
    EXPECT_TRUE(reports[i].connected);
    EXPECT_TRUE(reports[i].all_pass());
  }
  EXPECT_THROW(parse_sweep_items({"gens=1"}), GroupError);
}

TEST(SweepTest, DeterministicAcrossRunsAndWorkers) {
  const auto items = parse_sweep_items({"dihedral:3..5 gens=r,r^-1,s", "symmetric:4"});
  VerifyOptions one;
  VerifyOptions many;
  many.search.workers = 3;
  const auto a = sweep_json(sweep(items, one)).dump();
  const auto b = sweep_json(sweep(items, one)).dump();
  const auto c = sweep_json(sweep(items, many)).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(SerializationTest, JsonSchema) {
  const auto r = full_report(make_graph("cyclic:6", "1,5"), "cyclic:6", "1,5");
  const auto j = to_json(r);
  EXPECT_EQ(j["schema_version"], 1);
  for (const char* key : {"group", "gens", "n", "d", "h", "edge_h", "dual_h", "spectrum",
                          "bipartite", "checks", "proof_trace"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["h"]["num"], 2);
  EXPECT_EQ(j["h"]["den"], 3);
  EXPECT_EQ(j["spectrum"]["t"].size(), 6u);
  EXPECT_EQ(j["bipartite"]["structural"], true);
  EXPECT_EQ(j["proof_trace"]["subgroup"]["h"], nlohmann::json::parse("[0,2,4]"));
  for (const auto& c : j["checks"]) {
    const std::string status = c["status"];
    EXPECT_TRUE(status == "pass" || status == "fail" || status == "skipped" ||
                status == "not_applicable");
  }
}

TEST(SerializationTest, CsvColumns) {
  EXPECT_EQ(csv_header(),
            "group,gens,n,d,h,edge_h,dual_h,lambda2,lambda_max,bipartite,theorem_margin,"
            "tightness");
  const auto g = make_graph("cyclic:7", "±1,±2");
  const auto adj = oracle::adjacency(g.group(), testing_util::gens_of(g));
  const std::string prefix = "cyclic:7,\"±1,±2\",7,4," +
                             oracle::vertex_cheeger(adj).value.to_string() + "," +
                             oracle::edge_cheeger(adj).value.to_string() + "," +
                             oracle::dual_cheeger(adj).value.to_string() + ",";
  const auto row = csv_row(full_report(g, "cyclic:7", "±1,±2"));
  EXPECT_EQ(row.rfind(prefix, 0), 0u) << row;
}

}  // namespace
}  // namespace cayspec

// Copyright 2026 The enuniv Authors
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

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "enuniv/report.hpp"

namespace enuniv {
namespace {

using nlohmann::json;

CommandOptions family(const std::string& id, int n) {
  CommandOptions o;
  o.family = id;
  o.n = n;
  return o;
}

json strip_timing(json j) {
  j.erase("timing_ms");
  return j;
}

TEST(Report, ClosureExamples) {
  EXPECT_EQ(cmd_closure(family("oprime", 4)).results["dimension"], 28);
  EXPECT_EQ(cmd_closure(family("heisenberg:all", 3)).results["dimension"], 4);
  EXPECT_EQ(cmd_closure(family("xy:all", 3)).results["dimension"], 8);
  auto o = family("xy", 4);
  o.topology = "chain";
  const auto r = cmd_closure(o);
  EXPECT_EQ(r.results["family"], "xy:chain");
  EXPECT_EQ(r.results["dimension"], 6);
}

TEST(Report, UnknownFamilyIsAnError) {
  const auto r = cmd_closure(family("ising", 3));
  EXPECT_FALSE(r.ok());
  EXPECT_NE(r.exit_code(), 0);
  EXPECT_NE(r.errors.front().find("unknown family"), std::string::npos);
  EXPECT_FALSE(run_command("frobnicate", {}).ok());
}

TEST(Report, DecomposeTables) {
  const auto xy = cmd_decompose(family("xy:all", 3));
  ASSERT_TRUE(xy.ok());
  const json want = json::parse(R"([{"n_J":1,"d_J":2,"su":"n/a"},{"n_J":3,"d_J":2,"su":true}])");
  EXPECT_EQ(xy.results["sectors"], want);
  const auto col = cmd_decompose(family("collective", 4));
  for (const auto& s : col.results["sectors"]) {
    if (s["n_J"].get<int>() >= 3) EXPECT_EQ(s["su"], false);
  }
  EXPECT_EQ(col.results["total_dimension"], 16);
}

TEST(Report, VerdictExamples) {
  auto o = family("oprime", 0);
  o.n_min = 2;
  o.n_max = 8;
  auto r = cmd_verdict(o);
  EXPECT_EQ(r.results["verdict"], "NonUniversal");
  EXPECT_EQ(r.results["degree"], 2);
  o.family = "xy:chain";
  EXPECT_EQ(cmd_verdict(o).results["verdict"], "NonUniversal");
  o.family = "xy:all";
  o.n_max = 5;
  EXPECT_EQ(cmd_verdict(o).results["verdict"], "SuperPolynomial");
  o.n_max = 1;
  EXPECT_FALSE(cmd_verdict(o).ok());
}

TEST(Report, EncodeAndConjoin) {
  CommandOptions o;
  o.code = "code:xy-qutrit";
  const auto e = cmd_encode(o);
  ASSERT_TRUE(e.ok());
  EXPECT_EQ(e.results["codes"][0]["generates_su"], true);
  EXPECT_EQ(e.results["codes"][0]["dim_L"], 3);
  const auto table = cmd_encode(family("xy", 7));
  EXPECT_EQ(table.results["max_n_J"], 35);
  const auto c = cmd_conjoin(o);
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c.results["ambient_dim"], 15);
  EXPECT_EQ(c.results["witness"]["expression"], "[[A_16,A_15],A_12]");
}

TEST(Report, TrotterAndSynthesize) {
  const auto t = cmd_trotter({});
  ASSERT_TRUE(t.ok());
  EXPECT_LE(t.residuals["worst_ratio_p_ge_16"].get<double>(), 0.6);
  CommandOptions s;
  s.code = "code:trio";
  s.target = "rz:pi/2";
  const auto r = cmd_synthesize(s);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.results["success"], true);
  EXPECT_LT(r.residuals["distance"].get<double>(), 1e-4);
  s.target = "identity";
  EXPECT_TRUE(cmd_synthesize(s).results["sequence"].empty());
  s.target = "h";
  s.tol = 0.0;
  s.max_pulses = 1;
  const auto fail = cmd_synthesize(s);
  EXPECT_FALSE(fail.ok());
  EXPECT_GT(fail.residuals["distance"].get<double>(), 0.0);
}

TEST(Report, SilDefaultAndPerturbed) {
  const auto r = cmd_sil({});
  ASSERT_TRUE(r.ok());
  for (const auto& c : r.results["cases"]) EXPECT_LT(c["residual"].get<double>(), 1e-9);
  CommandOptions p;
  p.perturb = 1e-3;
  const auto q = cmd_sil(p);
  EXPECT_TRUE(q.ok());
  EXPECT_EQ(q.results["passes"], false);
  EXPECT_NEAR(q.residuals["worst_case"].get<double>(), 1e-3, 5e-4);
}

TEST(Report, RoundTripAndDeterminism) {
  auto o = family("heisenberg:all", 4);
  o.seed = 17;
  const auto a = cmd_decompose(o);
  const auto b = cmd_decompose(o);
  EXPECT_EQ(strip_timing(a.to_json()).dump(), strip_timing(b.to_json()).dump());
  EXPECT_EQ(a.to_json()["seed"], 17);
  const auto back = AnalysisReport::from_json(json::parse(a.to_json().dump()));
  EXPECT_EQ(back.to_json(), a.to_json());
  for (const char* key : {"schema_version", "command", "seed", "results", "residuals", "timing_ms"}) {
    EXPECT_TRUE(a.to_json().contains(key)) << key;
  }
  auto bad = a.to_json();
  bad["schema_version"] = kSchemaVersion + 1;
  EXPECT_THROW(AnalysisReport::from_json(bad), std::invalid_argument);
  EXPECT_FALSE(render_pretty(a).empty());
}

TEST(Report, CustomHamiltonianInput) {
  const std::string path = ::testing::TempDir() + "custom_gens.json";
  {
    std::ofstream out(path);
    out << R"({"n": 2, "terms": [
      {"coeff": 1.0, "paulis": [{"site": 0, "op": "Z"}]},
      {"coeff": 1.0, "paulis": [{"site": 1, "op": "Z"}]},
      {"coeff": 1.0, "paulis": [{"site": 0, "op": "X"}, {"site": 1, "op": "X"}]}]})";
  }
  CommandOptions o;
  o.family = "custom";
  o.input = path;
  const auto r = cmd_closure(o);
  ASSERT_TRUE(r.ok()) << r.errors.front();
  EXPECT_EQ(r.results["dimension"], 6);
  std::remove(path.c_str());
  EXPECT_THROW(parse_custom_generators(json::parse(R"({"n": 2, "terms": [{"coeff": 1, "paulis": [{"site": 5, "op": "X"}]}]})")),
               std::invalid_argument);
  EXPECT_THROW(parse_custom_generators(json::parse(R"({"n": 2, "terms": [{"coeff": 1, "paulis": [{"site": 0, "op": "W"}]}]})")),
               std::invalid_argument);
  EXPECT_THROW(parse_custom_generators(json::parse(R"({"terms": []})")), std::invalid_argument);
  o.input = "/nonexistent/file.json";
  EXPECT_FALSE(cmd_closure(o).ok());
}

}  // namespace
}  // namespace enuniv

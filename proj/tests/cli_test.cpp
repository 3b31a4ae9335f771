// Copyright 2026 The photonlogic Authors
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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "photonlogic/circuit_io.hpp"
#include "photonlogic/gate_params.hpp"
#include "photonlogic/numerics.hpp"

namespace photonlogic::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << contents;
  return path;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(Compile, Fig2File) {
  const std::string path =
      temp_file("cli_fig2.json", io::serialize_circuit(circuits::fig2_default()));
  const Result r = call({"compile", path});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["tally"]["cpath"], 4);
  EXPECT_EQ(j["tally"]["eraser"], 2);
  EXPECT_EQ(j["tally"]["merging"], 2);
}

TEST(Compile, BuiltinQft4) {
  const Result r = call({"compile", "--builtin", "qft4"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["tally"]["cpath"], 6);
  EXPECT_EQ(j["tally"]["eraser"], 3);
  EXPECT_EQ(j["tally"]["merging"], 3);
}

TEST(Compile, GroverAggregate) {
  const json j = json::parse(call({"compile", "--builtin", "grover3"}).out);
  EXPECT_EQ(j["tally"]["xpm_closed_form"], 34);
}

TEST(Compile, EmptyCircuit) {
  const std::string path =
      temp_file("cli_empty.json", R"({"qubits": 2, "gates": []})");
  const Result r = call({"compile", path});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["schedule"].empty());
  EXPECT_EQ(j["tally"]["cpath"], 0);
  EXPECT_EQ(j["tally"]["merging"], 0);
  EXPECT_EQ(j["tally"]["eraser"], 0);
  EXPECT_EQ(j["tally"]["xpm_model"], 0);
}

TEST(Compile, TextFormat) {
  const Result r = call({"compile", "--builtin", "fig2", "--format", "text"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("cpath 4, merging 2, eraser 2"), std::string::npos);
}

TEST(Compile, CostModelFile) {
  const std::string cost = temp_file("cli_cost.json", R"({"cpath_fixed": 10})");
  const json j = json::parse(
      call({"compile", "--builtin", "qft2", "--cost-model", cost}).out);
  EXPECT_EQ(j["tally"]["xpm_cpath"], 2 + 10 + 1);
  const std::string bad = temp_file("cli_cost_bad.json", R"({"nope": 1})");
  EXPECT_EQ(call({"compile", "--builtin", "qft2", "--cost-model", bad}).code,
            kSemanticError);
}

TEST(ExitCodes, ParseAndSchemaErrors) {
  const Result syntax = call({"compile", temp_file("cli_bad.json", "{\n\"qubits\": ,\n}")});
  EXPECT_EQ(syntax.code, kParseError);
  EXPECT_NE(syntax.err.find("line 2"), std::string::npos) << syntax.err;

  EXPECT_EQ(call({"compile", "/nonexistent/circuit.json"}).code, kParseError);
  EXPECT_EQ(call({"compile", temp_file("cli_schema.json",
                                       R"({"qubits": 1, "gates": [{"type": "cu",
                                          "control": 0, "target": 3,
                                          "u": [[[1,0],[0,0]],[[0,0],[1,0]]]}]})")})
                .code,
            kSemanticError);
  EXPECT_EQ(call({"compile", "--builtin", "bogus7"}).code, kSemanticError);
  EXPECT_EQ(call({"frobnicate"}).code, kParseError);
  EXPECT_EQ(call({}).code, kParseError);
  EXPECT_EQ(call({"compile"}).code, kParseError);
}

TEST(Simulate, Fig2Defaults) {
  const Result r = call({"simulate", "--builtin", "fig2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_GE(j["min_fidelity"].get<double>(), 1.0 - 1e-8);
  EXPECT_NEAR(j["total_probability"].get<double>(), 1.0, 1e-8);
  EXPECT_FALSE(j.contains("wall_time_s"));
  EXPECT_NE(r.err.find("wall time"), std::string::npos);
  EXPECT_TRUE(json::parse(call({"simulate", "--builtin", "fig2", "--timing"}).out)
                  .contains("wall_time_s"));
}

TEST(Simulate, ZeroThetaIsAParameterError) {
  const Result r = call({"simulate", "--builtin", "fig2", "--theta", "0"});
  EXPECT_EQ(r.code, kParameterError);
  EXPECT_NE(r.err.find("no path discrimination"), std::string::npos) << r.err;
}

TEST(Simulate, SampleModeIsReproducible) {
  const std::vector<std::string> args{"simulate", "--builtin", "qft3", "--mode",
                                      "sample",   "--seed",    "7"};
  const Result a = call(args);
  const Result b = call(args);
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["branches"].size(), 1u);
}

TEST(Simulate, PhysicalQndAtLowProbeAmplitudeLosesFidelity) {
  const Result r = call({"simulate", "--builtin", "fig2", "--qnd", "physical",
                         "--gamma", "300"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_LT(j["min_fidelity"].get<double>(), 0.999);
  EXPECT_NEAR(j["total_probability"].get<double>(), 1.0, 1e-8);
}

TEST(Simulate, QubitLimit) {
  EXPECT_EQ(call({"simulate", "--builtin", "qft9"}).code, kParameterError);
}

TEST(Sweep, HeaderAndRows) {
  const Result r = call({"sweep", "--alpha-range", "50:2000:3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto lines = split_lines(r.out);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], kSweepHeader);
  EXPECT_EQ(r.out.substr(0, std::string(kSweepHeader).size() + 1),
            std::string(kSweepHeader) + "\n");
  double previous = -1.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<double> cells;
    std::istringstream row(lines[i]);
    for (std::string cell; std::getline(row, cell, ',');) cells.push_back(std::stod(cell));
    ASSERT_EQ(cells.size(), 7u);
    EXPECT_DOUBLE_EQ(cells[3], numerics::beta_magnitude(cells[0], cells[1]));
    EXPECT_GE(cells[6], previous);
    previous = cells[6];
  }
  EXPECT_GE(previous, 1.0 - 1e-8);
}

TEST(Sweep, WritesFileAndRejectsEmptyRange) {
  const std::string path = ::testing::TempDir() + "cli_sweep.csv";
  ASSERT_EQ(call({"sweep", "--out", path}).code, kOk);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, kSweepHeader);
  std::remove(path.c_str());
  EXPECT_EQ(call({"sweep", "--alpha-range", "1:2:0"}).code, kParameterError);
  EXPECT_EQ(call({"sweep", "--theta-range", "0"}).code, kParameterError);
}

TEST(ParseRange, Forms) {
  EXPECT_EQ(parse_range("2.5"), std::vector<double>{2.5});
  EXPECT_EQ(parse_range("0:1:3"), (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_EQ(parse_range("4:9:1"), std::vector<double>{4.0});
  EXPECT_THROW(parse_range(""), ParameterError);
  EXPECT_THROW(parse_range("1:2"), ParameterError);
  EXPECT_THROW(parse_range("1:2:x"), ParameterError);
  EXPECT_THROW(parse_range("1:2:1.5"), ParameterError);
}

TEST(Verify, QuickPassesAndFaultFails) {
  const Result ok = call({"verify"});
  EXPECT_EQ(ok.code, kOk) << ok.out;
  std::size_t pass_lines = 0;
  for (const std::string& line : split_lines(ok.out)) {
    if (line.find(": PASS") != std::string::npos) ++pass_lines;
  }
  EXPECT_EQ(pass_lines, 8u);

  const Result bad = call({"verify", "--inject-fault", "bs-sign"});
  EXPECT_EQ(bad.code, kFailed);
  EXPECT_NE(bad.out.find("criterion 1 cpath-contract: FAIL"), std::string::npos);
}

}  // namespace
}  // namespace photonlogic::cli

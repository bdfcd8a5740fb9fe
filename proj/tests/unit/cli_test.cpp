// Copyright 2026 The luorbit Authors
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

// Runs the luorbit binary as a subprocess and checks exit codes and output.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LUORBIT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  Run r;
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("luorbit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }
  static std::string read(const std::string& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

using nlohmann::json;

TEST_F(Cli, AnalyzeGhz) {
  ASSERT_EQ(run("generate ghz --qubits 3 --out " + path("ghz.json")).code, 0);
  auto r = run("analyze " + path("ghz.json"));
  ASSERT_EQ(r.code, 0);
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["orbit_dimension"], 7);
  EXPECT_EQ(doc["is_minimal"], false);
}

TEST_F(Cli, AnalyzeSingleQubit) {
  ASSERT_EQ(run("generate basis --bits 0 --out " + path("zero.json")).code, 0);
  auto doc = json::parse(run("analyze " + path("zero.json")).out);
  EXPECT_EQ(doc["orbit_dimension"], 2);
  EXPECT_EQ(doc["is_minimal"], true);
}

TEST_F(Cli, AnalyzeExactBackendAndDump) {
  ASSERT_EQ(run("generate w --qubits 3 --out " + path("w.json")).code, 0);
  auto exact = json::parse(run("analyze " + path("w.json") + " --backend exact").out);
  EXPECT_EQ(exact["orbit_dimension"], 8);
  EXPECT_EQ(exact["diagnostics"]["backend"], "exact");
  auto m = json::parse(run("analyze " + path("w.json") + " --dump-matrix").out);
  ASSERT_EQ(m.size(), 10u);
  EXPECT_EQ(m[0].size(), 8u);
}

TEST_F(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run("analyze " + write("bad.json", "{not json")).code, 2);
  EXPECT_EQ(run("analyze " + path("missing.json")).code, 2);
  EXPECT_EQ(run("verify --suite nosuch").code, 2);
  EXPECT_EQ(run("generate singlet-product --pairs 1:2,2:3").code, 2);
  EXPECT_EQ(run("analyze").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("analyze " + write("z.json", R"({"n":1,"mode":"float","amplitudes":[[0,0],[0,0]]})")).code, 1);
}

TEST_F(Cli, ClassifyOutputs) {
  ASSERT_EQ(run("generate singlet-product --pairs 1:2,3:4 --out " + path("p.json")).code, 0);
  auto r = run("classify " + path("p.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out), json::parse(R"({"pairs":[[1,2],[3,4]],"lone":null})"));

  ASSERT_EQ(run("generate w --qubits 3 --out " + path("w.json")).code, 0);
  EXPECT_EQ(json::parse(run("classify " + path("w.json")).out),
            json::parse(R"({"not_minimal":true,"orbit_dimension":8})"));

  auto scrambled = run("classify " + path("p.json") + " --lu-seed 9");
  EXPECT_EQ(json::parse(scrambled.out), json::parse(r.out));
}

TEST_F(Cli, GenerateWAmplitudes) {
  auto doc = json::parse(run("generate w --qubits 3 --mode float").out);
  const double r = 1.0 / std::sqrt(3.0);
  for (int c = 0; c < 8; ++c) {
    const double want = (c == 1 || c == 2 || c == 4) ? r : 0.0;
    EXPECT_NEAR(doc["amplitudes"][c][0].get<double>(), want, 1e-15);
  }
}

TEST_F(Cli, GenerateIsDeterministic) {
  ASSERT_EQ(run("generate random --qubits 3 --seed 7 --out " + path("a.json")).code, 0);
  ASSERT_EQ(run("generate random --qubits 3 --seed 7 --out " + path("b.json")).code, 0);
  EXPECT_EQ(read(path("a.json")), read(path("b.json")));
  EXPECT_EQ(run("analyze " + path("a.json")).out, run("analyze " + path("a.json")).out);
  EXPECT_EQ(json::parse(run("analyze " + path("a.json")).out)["orbit_dimension"], 9);
}

TEST_F(Cli, AnalyzeDoesNotModifyInput) {
  ASSERT_EQ(run("generate ghz --qubits 3 --out " + path("g.json")).code, 0);
  const auto before = read(path("g.json"));
  run("analyze " + path("g.json") + " --lu-seed 3");
  run("classify " + path("g.json"));
  EXPECT_EQ(read(path("g.json")), before);
}

TEST_F(Cli, Compare) {
  ASSERT_EQ(run("generate singlet-product --pairs 1:2,3:4 --lu-seed 1 --out " + path("a.json")).code, 0);
  ASSERT_EQ(run("generate singlet-product --pairs 1:2,3:4 --lu-seed 2 --out " + path("b.json")).code, 0);
  ASSERT_EQ(run("generate singlet-product --pairs 1:3,2:4 --out " + path("c.json")).code, 0);
  ASSERT_EQ(run("generate random --qubits 4 --seed 1 --out " + path("r.json")).code, 0);

  auto same = run("compare " + path("a.json") + " " + path("b.json"));
  ASSERT_EQ(same.code, 0);
  EXPECT_EQ(json::parse(same.out)["equal"], true);
  EXPECT_EQ(json::parse(run("compare " + path("a.json") + " " + path("c.json")).out)["equal"], false);
  EXPECT_EQ(run("compare " + path("a.json") + " " + path("r.json")).code, 1);
}

TEST_F(Cli, Verify) {
  auto ok = run("verify --suite all --qubits 4 --trials 100 --seed 3");
  EXPECT_EQ(ok.code, 0) << ok.out;
  auto one = run("verify --suite minrankMstrong --qubits 4");
  EXPECT_EQ(one.code, 0);
  auto skipped = run("verify --suite pair_span_trichotomy --qubits 1");
  EXPECT_EQ(skipped.code, 0);
  EXPECT_EQ(skipped.out.rfind("SKIP pair_span_trichotomy", 0), 0u) << skipped.out;
  EXPECT_EQ(run("verify --suite all --qubits 3 --trials 20 --json").out,
            run("verify --suite all --qubits 3 --trials 20 --json").out);
}

}  // namespace

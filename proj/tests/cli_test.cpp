// Copyright 2026 The inckap Authors.
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

// Runs the built command-line binary as a subprocess.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string command = std::string(INCKAP_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(INCKAP_DATA_DIR) + "/" + name; }

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

TEST(Cli, SolveMBound) {
  const Result r = run("solve -i " + data("m_bound4.json"));
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["ratio"].get<double>(), 4.0);
  EXPECT_EQ(doc["rho"].get<double>(), 8.0);
  EXPECT_TRUE(doc["within_bound"].get<bool>());
  EXPECT_EQ(doc["order"], nlohmann::json({"e1", "e2"}));
}

TEST(Cli, SolveSingleAndSqrt6) {
  const Result single = run("solve -i " + data("single.json"));
  ASSERT_EQ(single.code, 0);
  EXPECT_EQ(nlohmann::json::parse(single.out)["ratio"].get<double>(), 1.0);
  const Result sqrt6 = run("solve -i " + data("sqrt6.json"));
  ASSERT_EQ(sqrt6.code, 0);
  EXPECT_LE(nlohmann::json::parse(sqrt6.out)["ratio"].get<double>(), 3.2924);
}

TEST(Cli, SolveInvalidInstance) {
  const Result r = run("solve -i " + data("invalid.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(run("solve -i /nonexistent.json").code, 2);
  EXPECT_EQ(run("solve").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
}

TEST(Cli, CapabilityLimit) {
  EXPECT_EQ(run("--limit-m 5 solve -i " + data("sqrt6.json")).code, 3);
  EXPECT_EQ(run("--limit-m 40 solve -i " + data("sqrt6.json")).code, 2);
}

TEST(Cli, CurveMBound) {
  const Result r = run("curve -i " + data("m_bound4.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "capacity,opt,alg,ratio\n1,1,1,1\n2,4,1,4\n3,5,5,1\n");
}

TEST(Cli, CurveSqrt6HasRow306) {
  const Result r = run("curve -i " + data("sqrt6.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n306,2.4494897427831779,"), std::string::npos);
  const Result table = run("curve --breakpoints -i " + data("sqrt6.json"));
  EXPECT_EQ(count_lines(table.out), 45u);
}

TEST(Cli, WritesOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "inckap_cli_curve.csv";
  ASSERT_EQ(run("curve -i " + data("m_bound4.json") + " -o " + path.string()).code, 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(count_lines(text.str()), 4u);
  std::filesystem::remove(path);
}

TEST(Cli, Best) {
  const Result r = run("best -i " + data("m_bound4.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["ratio"].get<double>(), 4.0);
}

TEST(Cli, Flow) {
  const Result blocking = run("flow -i " + data("blocking.graph"));
  ASSERT_EQ(blocking.code, 0);
  EXPECT_EQ(count_lines(blocking.out), 10u);
  EXPECT_NE(blocking.out.find("\n8,2,1,2\n"), std::string::npos);
  const Result json = run("--format json flow -i " + data("blocking.graph"));
  EXPECT_EQ(nlohmann::json::parse(json.out)["ratio"].get<double>(), 2.0);
  for (const char* name : {"parallel.graph", "path.graph"}) {
    const Result r = run("--format json flow -i " + data(name));
    ASSERT_EQ(r.code, 0) << name;
    EXPECT_EQ(nlohmann::json::parse(r.out)["ratio"].get<double>(), 1.0) << name;
  }
  EXPECT_EQ(run("flow -i " + data("unreachable.graph")).code, 2);
}

TEST(Cli, CompilePotential) {
  const Result r = run("compile -i " + data("potential_quadratic.json"));
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["clauses"].size(), 2u);
  EXPECT_EQ(doc["weights"], nlohmann::json({1, 2}));
}

TEST(Cli, GenIsReproducible) {
  const Result a = run("--seed 9 gen random --m 7 --k 3 --max-value 4");
  const Result b = run("--seed 9 gen random --m 7 --k 3 --max-value 4");
  const Result c = run("--seed 10 gen random --m 7 --k 3 --max-value 4");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["weights"].size(), 7u);
  EXPECT_EQ(run("gen nothing").code, 2);
  EXPECT_EQ(run("gen random --max-value 0.5").code, 2);
}

TEST(Cli, VerifySuites) {
  for (const char* suite : {"paperbounds", "lemmas", "flows"}) {
    const Result a = run(std::string("verify ") + suite);
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out.find("FAIL"), std::string::npos) << a.out;
    EXPECT_EQ(run(std::string("verify ") + suite).out, a.out);
  }
  EXPECT_EQ(run("verify unknown").code, 2);
}

}  // namespace

// Copyright 2026 The mzi-qkd Authors
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

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <doctest.h>
#include <json.hpp>

using nlohmann::json;

namespace {

const std::string kCli = MZIQKD_CLI_PATH;

struct CmdResult {
  int exit_code = -1;
  std::string output;
};

CmdResult run_cmd(const std::string& args, const std::string& env = "") {
  const std::string command = env + (env.empty() ? "" : " ") + kCli + " " +
                              args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.output.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::size_t count_lines_with(const std::string& text, const std::string& what) {
  std::size_t count = 0, at = 0;
  while ((at = text.find(what, at)) != std::string::npos) {
    ++count;
    at += what.size();
  }
  return count;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<double> split_csv_row(const std::string& row) {
  std::vector<double> values;
  std::istringstream in(row);
  std::string field;
  while (std::getline(in, field, ',')) {
    values.push_back(std::strtod(field.c_str(), nullptr));
  }
  return values;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify passes on a fresh build and lists every identity") {
  const CmdResult r = run_cmd("verify");
  CHECK(r.exit_code == 0);
  CHECK(count_lines_with(r.output, "PASS") >= 12);
  CHECK(count_lines_with(r.output, "FAIL") == 0);
  CHECK(r.output.find("Eq13") != std::string::npos);
}

TEST_CASE("verify fails loudly when a stored entry is corrupted") {
  const CmdResult r = run_cmd("verify --inject-fault Eq13:0:0:1e-6");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("FAIL") != std::string::npos);
  CHECK(r.output.find("Eq13") != std::string::npos);
}

TEST_CASE("run exit codes encode the verdict") {
  CHECK(run_cmd("run --pairs 5000 --attack none --seed 1 --format json")
            .exit_code == 0);
  CHECK(run_cmd("run --pairs 5000 --attack intercept --seed 1 --format json")
            .exit_code == 2);
  CHECK(run_cmd("run --pairs 1 --seed 0 --format json").exit_code == 3);
}

TEST_CASE("usage errors exit with code 64") {
  CHECK(run_cmd("run --attack bogus").exit_code == 64);
  CHECK(run_cmd("run --pairs 0").exit_code == 64);
  CHECK(run_cmd("run --sacrifice 1.0").exit_code == 64);
  CHECK(run_cmd("coincidence-scan --alpha-grid nonsense").exit_code == 64);
  CHECK(run_cmd("bogus-subcommand").exit_code == 64);
}

TEST_CASE("identical flags give byte-identical output") {
  const char* commands[] = {
      "run --pairs 4000 --attack intercept --seed 3 --format json",
      "run --pairs 4000 --attack nasty --seed 3 --format human",
      "run --pairs 4000 --attack block --seed 3 --format csv",
      "bell --mode sample --pairs 20000 --seed 9 --format json",
      "coincidence-scan --alpha-grid 0:6.28:40 --beta 0.5",
      "verify",
  };
  for (const char* command : commands) {
    const CmdResult a = run_cmd(command);
    const CmdResult b = run_cmd(command);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.output == b.output);
  }
}

TEST_CASE("worker count never changes the report") {
  const std::string base = "run --pairs 6000 --attack intercept --seed 4 "
                           "--format json --workers ";
  const CmdResult one = run_cmd(base + "1");
  CHECK(run_cmd(base + "2").output == one.output);
  CHECK(run_cmd(base + "7").output == one.output);
}

TEST_CASE("the environment seed applies only when the flag is absent") {
  const CmdResult flagged = run_cmd("run --pairs 3000 --seed 5 --format json");
  const CmdResult env_only =
      run_cmd("run --pairs 3000 --format json", "MZI_QKD_SEED=5");
  const CmdResult env_and_flag = run_cmd(
      "run --pairs 3000 --seed 5 --format json", "MZI_QKD_SEED=11");
  const CmdResult default_seed = run_cmd("run --pairs 3000 --format json");
  CHECK(env_only.output == flagged.output);
  CHECK(env_and_flag.output == flagged.output);
  CHECK(default_seed.output != flagged.output);
}

TEST_CASE("exact bell mode reports the quantum bound") {
  const CmdResult r = run_cmd("bell --mode exact --format json");
  CHECK(r.exit_code == 0);
  const json parsed = json::parse(r.output);
  CHECK(std::abs(parsed["S"].get<double>() - 2.0 * std::sqrt(2.0)) <= 1e-12);
  CHECK(std::abs(parsed["correlations"]["E_ab"].get<double>() -
                 std::numbers::sqrt2 / 2) <= 1e-12);
}

TEST_CASE("degenerate angles give the classical value") {
  const CmdResult r = run_cmd("bell --mode exact --angles 0,0,0,0 --format json");
  const json parsed = json::parse(r.output);
  CHECK(std::abs(parsed["S"].get<double>() - 2.0) <= 1e-12);
}

TEST_CASE("sampled bell mode lands near the exact value") {
  const CmdResult r =
      run_cmd("bell --mode sample --pairs 100000 --seed 2 --format json");
  const json parsed = json::parse(r.output);
  CHECK(std::abs(parsed["S"].get<double>() - 2.0 * std::sqrt(2.0)) <= 0.05);
}

TEST_CASE("the coincidence scan stays within tolerance of the law") {
  const CmdResult r = run_cmd(
      "coincidence-scan --alpha-grid 0:6.283185307179586:30 --beta 0.7");
  CHECK(r.exit_code == 0);
  const auto lines = split_lines(r.output);
  REQUIRE(lines.size() == 31);  // header + 30 rows
  CHECK(lines[0] ==
        "alpha,beta,P_1p1p,P_2p2p,P_1p2p,P_2p1p,analytic,abs_error");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = split_csv_row(lines[i]);
    REQUIRE(row.size() == 8);
    const double alpha = row[0], beta = row[1];
    const double half = (alpha - beta) / 2.0;
    CHECK(std::abs(row[2] - 0.5 * std::cos(half) * std::cos(half)) <= 1e-12);
    CHECK(row[7] <= 1e-12);
  }
}

TEST_CASE("a matched-phase scan row shows the perfect coincidence") {
  const CmdResult r = run_cmd("coincidence-scan --alpha-grid 0.7:0.7:1 --beta 0.7");
  const auto lines = split_lines(r.output);
  REQUIRE(lines.size() == 2);
  const auto row = split_csv_row(lines[1]);
  CHECK(std::abs(row[2] - 0.5) <= 1e-12);
  CHECK(std::abs(row[3] - 0.5) <= 1e-12);
  CHECK(row[4] <= 1e-12);
  CHECK(row[5] <= 1e-12);
}

TEST_CASE("an opposed-phase scan row extinguishes the coincidences") {
  const CmdResult r = run_cmd(
      "coincidence-scan --alpha-grid 3.841592653589793:3.841592653589793:1 "
      "--beta 0.7");
  const auto lines = split_lines(r.output);
  REQUIRE(lines.size() == 2);
  const auto row = split_csv_row(lines[1]);
  CHECK(row[2] <= 1e-12);  // P(1+,1+) dark at alpha - beta = pi
  CHECK(row[3] <= 1e-12);
  CHECK(std::abs(row[4] - 0.5) <= 1e-12);
  CHECK(std::abs(row[5] - 0.5) <= 1e-12);
}

}  // TEST_SUITE

// Copyright 2026 The qot Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qot/json_io.hpp"
#include "qot/states.hpp"

namespace {

std::string cli_path() { return QOT_CLI_PATH; }

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run(const std::string& args) {
  const std::string out_file = "cli_stdout.tmp";
  const std::string cmd = cli_path() + " " + args + " > " + out_file + " 2>&1";
  const int rc = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Pulls the number out of a "value <x>" line in report output.
double parse_value_line(const std::string& text) {
  const auto pos = text.find("value ");
  REQUIRE(pos != std::string::npos);
  return std::stod(text.substr(pos + 6));
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

void write_states() {
  using qot::Matrix;
  Matrix half = Matrix::identity(2) * 0.5;
  qot::io::save_state("mixed2.json", qot::states::DensityMatrix(half));
  qot::io::save_state("pure0.json",
                      qot::states::PureState::basis_state(2, 0).projector());
}

}  // namespace

TEST_CASE("distance subcommand") {
  write_states();

  SUBCASE("fixed transport value") {
    const auto r = run(
        "distance --kind dpt-ppt --obs z --rho mixed2.json --sigma pure0.json");
    CHECK(r.exit_code == 0);
    CHECK(parse_value_line(r.stdout_text) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(r.stdout_text.find("bound_kind exact") != std::string::npos);
  }
  SUBCASE("self fidelity is one") {
    const auto r = run("distance --kind fidelity --rho mixed2.json --sigma mixed2.json");
    CHECK(r.exit_code == 0);
    CHECK(parse_value_line(r.stdout_text) == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("qubit bsf2 equals 1 - F") {
    const auto r = run("distance --kind bsf2 --rho mixed2.json --sigma pure0.json");
    CHECK(r.exit_code == 0);
    // F(I/2, |0><0|) = 1/2, so the distance is 0.5.
    CHECK(parse_value_line(r.stdout_text) == doctest::Approx(0.5).epsilon(1e-4));
  }
  SUBCASE("missing file exits 2") {
    const auto r = run("distance --kind fidelity --rho nope.json --sigma mixed2.json");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("malformed state exits 2") {
    std::ofstream bad("bad.json");
    bad << "{\"dim\": 2, \"re\": [[1,0],[0,1]], \"im\": [[0,0],[0,0]]}\n";
    bad.close();  // trace 2: fails validation
    const auto r = run("distance --kind fidelity --rho bad.json --sigma mixed2.json");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("unknown kind exits 2") {
    const auto r = run("distance --kind nope --rho mixed2.json --sigma mixed2.json");
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("selfdist subcommand") {
  write_states();
  const auto r = run("selfdist --rho mixed2.json --obs su --cone ppt");
  CHECK(r.exit_code == 0);
  CHECK(parse_value_line(r.stdout_text) == doctest::Approx(2.0).epsilon(1e-9));  // 2(d-1), d=2
}

TEST_CASE("scatter subcommand") {
  const auto r1 = run("scatter --d 2 --n 6 --seed 5 --out scatter1.csv");
  REQUIRE(r1.exit_code == 0);
  const auto r2 = run("scatter --d 2 --n 6 --seed 5 --out scatter2.csv");
  REQUIRE(r2.exit_code == 0);

  SUBCASE("byte-identical reruns") {
    CHECK(slurp("scatter1.csv") == slurp("scatter2.csv"));
  }
  SUBCASE("schema and qubit equality") {
    const auto rows = parse_csv(slurp("scatter1.csv"));
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == std::vector<std::string>{"index", "F", "FS_ppt"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double f = std::stod(rows[i][1]);
      const double fs = std::stod(rows[i][2]);
      CHECK(std::abs(f - fs) <= 1e-4);
    }
  }
}

TEST_CASE("dynamics subcommand") {
  const auto r = run(
      "dynamics --d 2 --seed 4 --theta-start 0 --theta-step 0.02 "
      "--theta-stop 0.06 --obs z --out dyn.csv");
  REQUIRE(r.exit_code == 0);
  const std::string text = slurp("dyn.csv");
  const auto rows = parse_csv(text);
  REQUIRE(rows.size() >= 5);
  CHECK(rows[0] == std::vector<std::string>{"theta", "F", "FS_ppt"});
  // theta = 0 row: both quantities are 1.
  CHECK(std::stod(rows[1][1]) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::stod(rows[1][2]) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(text.find("# d2F,") != std::string::npos);
  CHECK(text.find("minus_qfi_over_2") != std::string::npos);
}

TEST_CASE("verify subcommand") {
  const auto r = run("verify --d 2 --n 2 --seed 7 --out verify.csv");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("assertable checks passed") != std::string::npos);
  const auto rows = parse_csv(slurp("verify.csv"));
  REQUIRE(rows.size() > 3);
  CHECK(rows[0] == std::vector<std::string>{"check", "lhs", "rhs", "margin",
                                            "pass", "seed", "dimension"});
  // The fixed rows come first and reproduce the known exact values.
  CHECK(rows[1][0] == "appendixA_dpt_ppt");
  CHECK(std::stod(rows[1][1]) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(rows[3][0] == "appendixA_decomp");
  CHECK(std::stod(rows[3][1]) == doctest::Approx(0.5).epsilon(1e-12));
  for (const auto& row : rows)
    if (row.size() == 7 && row[0] != "check") CHECK(row[4] == "1");
}

// Copyright 2026 The rkg Authors
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
//
// The CLI must stay a thin wrapper: every command's file output is
// compared byte for byte against the corresponding direct library call.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "rkg/rkg.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string file_content;
};

RunResult run_cli(const std::string& args, const std::string& out_file) {
  const std::string cmd = std::string(RKG_CLI_PATH) + " " + args +
                          " --out " + out_file + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_file, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  result.file_content = ss.str();
  fs::remove(out_file);
  return result;
}

int run_cli_status(const std::string& args) {
  const std::string cmd =
      std::string(RKG_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

std::string tmp_file(const char* name) {
  return (fs::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("analytic command equals the library serialization", "[cli]") {
  const auto res = run_cli("analytic --K 4 --P 1000 --n 1000 --format csv",
                           tmp_file("rkg_cli_analytic.csv"));
  REQUIRE(res.exit_code == 0);
  std::ostringstream expected;
  rkg::write_csv(rkg::make_analytic_report(1000, rkg::Theta(4, 1000)),
                 expected);
  REQUIRE(res.file_content == expected.str());

  const auto jres = run_cli("analytic --K 4 --P 1000 --n 1000 --format json",
                            tmp_file("rkg_cli_analytic.json"));
  REQUIRE(jres.exit_code == 0);
  const auto doc = nlohmann::json::parse(jres.file_content);
  REQUIRE(doc["rows"][0]["c_k"].get<double>() ==
          Catch::Approx(0.2590).margin(5e-4));
  REQUIRE(doc["version"] == rkg::kVersion);

  const auto complete = run_cli("analytic --K 3 --P 5 --format json",
                                tmp_file("rkg_cli_analytic2.json"));
  const auto doc2 = nlohmann::json::parse(complete.file_content);
  REQUIRE(doc2["rows"][0]["q"].get<double>() == 0.0);
  REQUIRE(doc2["rows"][0]["c_k"].get<double>() == 1.0);
}

TEST_CASE("table command equals the library serialization", "[cli]") {
  const auto res = run_cli(
      "table --which I --n 60 --reps 10 --seed 9 --threads 2 --format csv",
      tmp_file("rkg_cli_table.csv"));
  REQUIRE(res.exit_code == 0);
  std::ostringstream expected;
  rkg::write_csv(rkg::reproduce_table(rkg::PaperTable::one, 60, 10, 9, 2),
                 expected);
  REQUIRE(res.file_content == expected.str());
}

TEST_CASE("zero-one command with a family file", "[cli]") {
  const std::string family_path = tmp_file("rkg_cli_family.csv");
  {
    std::ofstream f(family_path);
    f << "n,K,P\n# comment\n30,1,30\n60,1,60\n";
  }
  const auto res = run_cli("zero-one --family file --family-file " +
                               family_path +
                               " --reps 50 --seed 3 --format csv",
                           tmp_file("rkg_cli_zeroone.csv"));
  REQUIRE(res.exit_code == 0);
  const auto family = rkg::ScalingFamily::explicit_table(
      {{30, 1, 30}, {60, 1, 60}});
  std::ostringstream expected;
  rkg::write_csv(rkg::zero_one_sweep(family, {30, 60}, 50, 3, 1), expected);
  REQUIRE(res.file_content == expected.str());
  fs::remove(family_path);
}

TEST_CASE("sweep command equals the library serialization", "[cli]") {
  const auto res = run_cli(
      "sweep --family connectivity --c 2 --n-list 250,500 --format csv",
      tmp_file("rkg_cli_sweep.csv"));
  REQUIRE(res.exit_code == 0);
  std::ostringstream expected;
  rkg::write_csv(rkg::ratio_sweep(rkg::ScalingFamily::connectivity(2.0),
                                  {250, 500}, 0, 0, 1),
                 expected);
  REQUIRE(res.file_content == expected.str());
}

TEST_CASE("moments command equals the library serialization", "[cli]") {
  const auto res = run_cli(
      "moments --n 4 --K 2 --P 4 --reps 2000 --seed 11 --format csv",
      tmp_file("rkg_cli_moments.csv"));
  REQUIRE(res.exit_code == 0);
  std::ostringstream expected;
  rkg::write_csv(rkg::moment_check(4, rkg::Theta(2, 4), 2000, 11, 1),
                 expected);
  REQUIRE(res.file_content == expected.str());
}

TEST_CASE("oracle command prints exact rationals", "[cli]") {
  const auto res = run_cli("oracle --op beta --K 2 --P 4 --format csv",
                           tmp_file("rkg_cli_oracle.csv"));
  REQUIRE(res.exit_code == 0);
  REQUIRE(res.file_content ==
          "quantity,t,numerator,denominator,value\n"
          "beta,,7,12,0.5833333333\n");
}

TEST_CASE("sample dump equals the library edge list", "[cli]") {
  const std::string dump_path = tmp_file("rkg_cli_dump.txt");
  const int code = run_cli_status(
      "sample --kind rkg --n 20 --K 2 --P 15 --seed 5 --dump " + dump_path);
  REQUIRE(code == 0);
  std::ifstream in(dump_path, std::ios::binary);
  std::ostringstream got;
  got << in.rdbuf();
  fs::remove(dump_path);

  auto rng = rkg::Xoshiro256::substream(5, 0);
  const rkg::SimpleGraph g = rkg::sample_rkg(20, rkg::Theta(2, 15), rng);
  std::ostringstream expected;
  rkg::write_edge_list(g, expected);
  REQUIRE(got.str() == expected.str());
}

TEST_CASE("exit codes", "[cli]") {
  REQUIRE(run_cli_status("analytic --K 9 --P 5") == 3);       // K > P
  REQUIRE(run_cli_status("oracle --op beta --K 8 --P 64") == 4);  // guard
  REQUIRE(run_cli_status("analytic --bogus-flag 1") == 2);
  REQUIRE(run_cli_status("") == 2);  // subcommand required
  REQUIRE(run_cli_status("--help") == 0);
  REQUIRE(run_cli_status("sample --kind er --n 5 --seed 1") == 3);  // no --p
  REQUIRE(run_cli_status(
              "sweep --family connectivity --c 2 --n-list 100 --mc-reps 10") ==
          3);  // Monte Carlo without an explicit seed
}

// Copyright 2026 The tubealg Authors
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

#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "support.hpp"
#include "tubealg/report.hpp"

using tubealg::json;
using Catch::Matchers::ContainsSubstring;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "\"" + TUBEALG_CLI_PATH + "\" " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("verify exit codes", "[cli]") {
  auto fib = run("verify --category builtin:fibonacci");
  CHECK(fib.code == 0);
  CHECK_THAT(fib.out, ContainsSubstring("result: pass"));

  auto trivial = run("verify --category builtin:trivial --format json");
  REQUIRE(trivial.code == 0);
  auto doc = json::parse(trivial.out);
  CHECK(doc["passed"].get<bool>());
  for (const auto& check : doc["checks"]) CHECK(check["max_residual"].get<double>() == 0.0);

  {
    std::ofstream bad("corrupted.json");
    bad << "{\"labels\": [\"1\"], \"dual\": [0], \"fusion\": [], \"F\": [], \"R\": [], \"extra\": 1}";
  }
  auto corrupted = run("verify --category corrupted.json");
  CHECK(corrupted.code == 2);
  CHECK_THAT(corrupted.out, ContainsSubstring("schema violation"));

  CHECK(run("verify --category builtin:nosuch").code == 2);
  CHECK(run("verify --category builtin:semion --checks pentagon,bogus").code == 2);
  CHECK(run("verify --category builtin:semion", "TUBEALG_DATA_DIR=/nonexistent").code == 2);
  CHECK(run("verify --category builtin:semion", std::string("TUBEALG_DATA_DIR=") + TUBEALG_TEST_DATA_DIR).code == 0);
}

TEST_CASE("verify reports a failing check with exit code 1", "[cli]") {
  std::ifstream in(std::string(TUBEALG_TEST_DATA_DIR) + "/semion.json");
  json doc = json::parse(in);
  for (auto& rec : doc["R"])
    if (rec["labels"] == json{"s", "s", "1"}) rec["value"] = {1.0, 0.0};
  std::ofstream("broken_semion.json") << doc.dump();
  auto r = run("verify --category broken_semion.json --checks pentagon,hexagon");
  CHECK(r.code == 1);
  CHECK_THAT(r.out, ContainsSubstring("FAIL"));
}

TEST_CASE("modular-data output", "[cli]") {
  auto semion = run("modular-data --category builtin:semion --format json");
  REQUIRE(semion.code == 0);
  auto md = json::parse(semion.out).get<tubealg::mtc::ModularData>();
  CHECK(std::abs(md.s_matrix(1, 1) + 1.0) < 1e-9);
  CHECK(std::abs(md.t_matrix(1, 1) - tubealg::Complex(0.0, 1.0)) < 1e-9);

  auto trivial = run("modular-data --category builtin:trivial");
  CHECK(trivial.code == 0);
  CHECK_THAT(trivial.out, ContainsSubstring("lambda = 1"));

  auto ising = json::parse(run("modular-data --category builtin:ising --format json").out).get<tubealg::mtc::ModularData>();
  const auto& f = tubealg::testing::fixture("ising");
  for (int j = 0; j < 3; ++j) CHECK(std::abs(ising.s_matrix(0, j) - f.cat.qdim(j)) < 1e-9);

  std::ofstream("semion_md.json") << json{{"S", json::parse(semion.out)["S"]}, {"T", json::parse(semion.out)["T"]}}.dump();
  auto standalone = run("enumerate --modular-data semion_md.json --entry-bound 2");
  CHECK(standalone.code == 0);
  CHECK_THAT(standalone.out, ContainsSubstring("modular invariants: 1"));
}

TEST_CASE("enumerate output and budget", "[cli]") {
  auto fib = run("enumerate --category builtin:fibonacci --format json");
  REQUIRE(fib.code == 0);
  auto doc = json::parse(fib.out);
  CHECK(doc["count"] == 1);
  CHECK(doc["invariants"][0] == json::parse("[[1,0],[0,1]]"));

  auto brute = run("enumerate --category builtin:z3 --entry-bound 2 --brute-force");
  CHECK(brute.code == 0);
  CHECK_THAT(brute.out, ContainsSubstring("brute force agrees: yes"));

  CHECK(run("enumerate --category builtin:double_z2 --entry-bound 3 --budget 10").code == 3);
}

TEST_CASE("check-rep verdicts", "[cli]") {
  auto id = run("check-rep --category builtin:semion --z identity");
  CHECK(id.code == 0);
  CHECK_THAT(id.out, ContainsSubstring("invariant: yes"));

  auto bad = run("check-rep --category builtin:semion --z '[[1,1],[0,1]]'");
  CHECK(bad.code == 0);
  CHECK_THAT(bad.out, ContainsSubstring("invariant: no"));
  CHECK_THAT(bad.out, ContainsSubstring("T-trace mismatch at: (1,s)\n"));

  auto count = json::parse(run("enumerate --category builtin:double_z2 --format json").out)["count"].get<int>();
  REQUIRE(count > 0);
  for (int k = 0; k < count; ++k) {
    auto r = run("check-rep --category builtin:double_z2 --z enum:" + std::to_string(k));
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("invariant: yes"));
  }
  CHECK(run("check-rep --category builtin:double_z2 --z enum:" + std::to_string(count)).code == 2);

  std::ofstream("z.json") << "[[1,0],[0,2]]";
  auto from_file = run("check-rep --category builtin:semion --z @z.json");
  CHECK(from_file.code == 0);
  CHECK_THAT(from_file.out, ContainsSubstring("invariant: no"));

  CHECK(run("check-rep --category builtin:semion --z '[[1,0,0],[0,1,0],[0,0,1]]'").code == 2);
  CHECK(run("check-rep --category builtin:semion --z '[[1,0],[0,-1]]'").code == 2);
  CHECK(run("check-rep --category builtin:semion --z @missing.json").code == 2);
}

TEST_CASE("reports are deterministic and round-trip", "[cli]") {
  const std::string args = "check-rep --category builtin:ising --z random --seed 5 --format json";
  auto a = run(args);
  auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto doc = json::parse(a.out);
  auto report = doc["report"].get<tubealg::reps::ModularInvarianceReport>();
  CHECK(json(report) == doc["report"]);
  CHECK(report.recovered_z == tubealg::int_matrix_from_json(doc["z"]));

  const std::string verify = "verify --category builtin:ising --checks associativity --seed 9";
  CHECK(run(verify).out == run(verify).out);
}

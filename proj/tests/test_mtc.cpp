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

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "support.hpp"
#include "tubealg/mtc.hpp"

using tubealg::mtc::LoadError;
using tubealg::mtc::load_category_string;
using tubealg::testing::bundled_names;
using tubealg::testing::data_path;
using Catch::Matchers::ContainsSubstring;

namespace {

nlohmann::json bundled_json(const std::string& name) {
  std::ifstream in(data_path(name));
  return nlohmann::json::parse(in);
}

nlohmann::json& find_record(nlohmann::json& list, const std::vector<std::string>& labels) {
  for (auto& rec : list)
    if (rec["labels"].get<std::vector<std::string>>() == labels) return rec;
  throw std::runtime_error("record not found");
}

}  // namespace

TEST_CASE("trivial category loads with unit global dimension", "[mtc]") {
  auto cat = tubealg::mtc::load_category_file(data_path("trivial"));
  CHECK(cat.rank() == 1);
  CHECK(std::abs(cat.global_dim() - 1.0) == 0.0);
  CHECK(std::abs(cat.twist(0) - 1.0) == 0.0);
}

TEST_CASE("Fibonacci quantum dimension is the positive root of d^2 = d + 1", "[mtc]") {
  auto cat = tubealg::mtc::load_category_file(data_path("fibonacci"));
  const double root = (1.0 + std::sqrt(1.0 + 4.0)) / 2.0;
  auto tau = *cat.ring().find("tau");
  CHECK(std::abs(cat.qdim(tau) - root) < 1e-9);
  CHECK(std::abs(cat.global_dim() - (1.0 + root * root)) < 1e-9);
}

TEST_CASE("quantum dimensions satisfy the fusion rules in every bundled category", "[mtc]") {
  for (const auto& name : bundled_names()) {
    auto cat = tubealg::mtc::load_category_file(data_path(name));
    const auto& ring = cat.ring();
    for (int a = 0; a < cat.rank(); ++a)
      for (int b = 0; b < cat.rank(); ++b) {
        tubealg::Complex sum = 0.0;
        for (int c = 0; c < cat.rank(); ++c) sum += double(ring.N(a, b, c)) * cat.qdim(c);
        CHECK(std::abs(cat.qdim(a) * cat.qdim(b) - sum) < 1e-9);
      }
  }
}

TEST_CASE("loader rejects malformed category files", "[mtc][errors]") {
  SECTION("duality mismatch") {
    auto doc = bundled_json("z3");
    doc["dual"] = {0, 1, 2};
    CHECK_THROWS_WITH(load_category_string(doc.dump()), ContainsSubstring("duality mismatch"));
  }
  SECTION("non-involutive dual") {
    auto doc = bundled_json("z3");
    doc["dual"] = {0, 2, 2};
    CHECK_THROWS_WITH(load_category_string(doc.dump()), ContainsSubstring("non-involutive"));
  }
  SECTION("unknown key") {
    auto doc = bundled_json("semion");
    doc["braiding"] = 1;
    CHECK_THROWS_WITH(load_category_string(doc.dump()), ContainsSubstring("unknown key"));
  }
  SECTION("qdim contradicting the fusion rules") {
    auto doc = bundled_json("fibonacci");
    doc["qdim"] = {{1.0, 0.0}, {2.0, 0.0}};
    CHECK_THROWS_WITH(load_category_string(doc.dump()), ContainsSubstring("inconsistent dimensions"));
  }
  SECTION("twist contradicting the R-symbols") {
    auto doc = bundled_json("semion");
    doc["twist"] = {{1.0, 0.0}, {1.0, 0.0}};
    CHECK_THROWS_WITH(load_category_string(doc.dump()), ContainsSubstring("inconsistent twists"));
  }
  SECTION("fusion multiplicity two") {
    auto doc = bundled_json("semion");
    doc["fusion"].push_back({"s", "s", "1"});
    CHECK_THROWS_WITH(load_category_string(doc.dump()), ContainsSubstring("multiplicity"));
  }
  SECTION("non-admissible F-symbol") {
    auto doc = bundled_json("semion");
    doc["F"].push_back({{"labels", {"s", "s", "s", "1", "1", "1"}}, {"value", {1.0, 0.0}}});
    CHECK_THROWS_WITH(load_category_string(doc.dump()), ContainsSubstring("non-admissible"));
  }
  SECTION("missing R-symbol") {
    auto doc = bundled_json("semion");
    auto& r = doc["R"];
    r.erase(r.end() - 1);
    CHECK_THROWS_WITH(load_category_string(doc.dump()), ContainsSubstring("missing R-symbol"));
  }
  SECTION("invalid JSON") {
    CHECK_THROWS_AS(load_category_string("{\"labels\": ["), LoadError);
  }
  SECTION("unreadable file") {
    CHECK_THROWS_AS(tubealg::mtc::load_category_file("/nonexistent/category.json"), LoadError);
  }
}

TEST_CASE("unit-leg symbols may be omitted", "[mtc]") {
  auto doc = bundled_json("semion");
  nlohmann::json f = nlohmann::json::array();
  for (const auto& rec : doc["F"])
    if (rec["labels"].get<std::vector<std::string>>() == std::vector<std::string>{"s", "s", "s", "s", "1", "1"})
      f.push_back(rec);
  doc["F"] = f;
  nlohmann::json r = nlohmann::json::array();
  r.push_back(find_record(doc["R"], {"s", "s", "1"}));
  doc["R"] = r;
  auto cat = load_category_string(doc.dump());
  CHECK(tubealg::mtc::verify_pentagon(cat).passed);
  CHECK(tubealg::mtc::verify_hexagon(cat).passed);
}

TEST_CASE("pentagon holds on the bundled data", "[mtc][pentagon]") {
  for (const auto& name : bundled_names()) {
    auto report = tubealg::mtc::verify_pentagon(tubealg::mtc::load_category_file(data_path(name)));
    INFO(name);
    CHECK(report.passed);
    CHECK(report.max_residual <= 1e-9);
    CHECK(report.instances > 0);
  }
  auto trivial = tubealg::mtc::verify_pentagon(tubealg::mtc::load_category_file(data_path("trivial")));
  CHECK(trivial.max_residual == 0.0);
}

TEST_CASE("pentagon detects a single flipped F-symbol in Ising", "[mtc][pentagon]") {
  auto doc = bundled_json("ising");
  auto& rec = find_record(doc["F"], {"sigma", "psi", "sigma", "psi", "sigma", "sigma"});
  rec["value"][0] = -rec["value"][0].get<double>();
  auto report = tubealg::mtc::verify_pentagon(load_category_string(doc.dump()));
  CHECK_FALSE(report.passed);
  CHECK(report.max_residual > 1e-3);
  CHECK_FALSE(report.failures.empty());
}

TEST_CASE("hexagon holds on the bundled data", "[mtc][hexagon]") {
  for (const auto& name : bundled_names()) {
    auto report = tubealg::mtc::verify_hexagon(tubealg::mtc::load_category_file(data_path(name)));
    INFO(name);
    CHECK(report.passed);
    CHECK(report.max_residual <= 1e-9);
  }
  auto trivial = tubealg::mtc::verify_hexagon(tubealg::mtc::load_category_file(data_path("trivial")));
  CHECK(trivial.max_residual == 0.0);
}

TEST_CASE("hexagon detects R-symbol perturbations", "[mtc][hexagon]") {
  SECTION("conjugating the only nontrivial semion slot yields the mirror braiding") {
    auto doc = bundled_json("semion");
    auto& rec = find_record(doc["R"], {"s", "s", "1"});
    rec["value"][1] = -rec["value"][1].get<double>();
    CHECK(tubealg::mtc::verify_hexagon(load_category_string(doc.dump())).passed);
  }
  SECTION("semion with R^{ss}_1 = 1") {
    auto doc = bundled_json("semion");
    find_record(doc["R"], {"s", "s", "1"})["value"] = {1.0, 0.0};
    auto report = tubealg::mtc::verify_hexagon(load_category_string(doc.dump()));
    CHECK_FALSE(report.passed);
    CHECK(report.max_residual > 1e-3);
  }
  SECTION("z3 with one R-symbol conjugated") {
    auto doc = bundled_json("z3");
    auto& rec = find_record(doc["R"], {"1", "1", "2"});
    rec["value"][1] = -rec["value"][1].get<double>();
    auto report = tubealg::mtc::verify_hexagon(load_category_string(doc.dump()));
    CHECK_FALSE(report.passed);
    CHECK(report.max_residual > 1e-3);
  }
}

TEST_CASE("loading is deterministic", "[mtc]") {
  auto a = tubealg::mtc::load_category_file(data_path("ising"));
  auto b = tubealg::mtc::load_category_file(data_path("ising"));
  CHECK(a.f_symbols() == b.f_symbols());
  CHECK(a.r_symbols() == b.r_symbols());
}

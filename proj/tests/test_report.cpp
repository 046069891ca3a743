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

#include "support.hpp"
#include "tubealg/report.hpp"

using tubealg::ConsistencyReport;
using tubealg::IntMatrix;
using tubealg::json;
using tubealg::testing::bundled_names;
using tubealg::testing::fixture;

namespace {

template <typename T>
T round_trip(const T& value) {
  json j = value;
  return json::parse(j.dump()).get<T>();
}

}  // namespace

TEST_CASE("consistency reports round-trip through JSON", "[report]") {
  ConsistencyReport r("pentagon", 1e-9);
  r.record("(1,1,1,1)", 0.0);
  r.record("(s,s,s,s)", 0.125);
  r.record("(s,1,s,1)", 1.0 / 3.0);
  ConsistencyReport back = round_trip(r);
  CHECK(back == r);
  CHECK_FALSE(back.passed);
  CHECK(back.failures.size() == 2);
}

TEST_CASE("modular data round-trips through JSON", "[report]") {
  for (const auto& name : bundled_names()) {
    const auto& md = fixture(name).md;
    auto back = round_trip(md);
    CHECK(back.labels == md.labels);
    CHECK(back.s_matrix == md.s_matrix);
    CHECK(back.t_matrix == md.t_matrix);
    CHECK(back.charge_conj == md.charge_conj);
    CHECK(back.lambda == md.lambda);
    CHECK(back.global_dim == md.global_dim);
  }
}

TEST_CASE("invariance reports round-trip through JSON", "[report]") {
  const auto& f = fixture("semion");
  for (IntMatrix z : {IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{1, 1}, {0, 1}}, IntMatrix{{1, 0}, {0, 2}}}) {
    auto report = tubealg::reps::check_modular_invariance(tubealg::reps::build_rep(f.ctx, z), f.md);
    CHECK(round_trip(report) == report);
    CHECK(round_trip(report.t) == report.t);
    CHECK(json(round_trip(report)).dump() == json(report).dump());
  }
}

TEST_CASE("integer matrix parsing", "[report]") {
  CHECK(tubealg::int_matrix_from_json(json::parse("[[1,2],[0,1]]")) == IntMatrix{{1, 2}, {0, 1}});
  CHECK_THROWS_AS(tubealg::int_matrix_from_json(json::parse("[[1,2]]")), tubealg::Error);
  CHECK_THROWS_AS(tubealg::int_matrix_from_json(json::parse("[[1.5,0],[0,1]]")), tubealg::Error);
  CHECK_THROWS_AS(tubealg::int_matrix_from_json(json::parse("{\"a\": 1}")), tubealg::Error);
}

TEST_CASE("text formatting", "[report]") {
  CHECK(tubealg::format_int_matrix(IntMatrix{{1, 0}, {0, 1}}) == "  [1 0]\n  [0 1]\n");
  CHECK(tubealg::format_complex({0.0, 1.0}) == tubealg::format_complex({1e-12, 1.0}));
}

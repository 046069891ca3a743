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

#ifndef TUBEALG_TESTS_SUPPORT_HPP
#define TUBEALG_TESTS_SUPPORT_HPP

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "tubealg/calculus.hpp"
#include "tubealg/modular_data.hpp"
#include "tubealg/reps.hpp"
#include "tubealg/tube.hpp"

namespace tubealg::testing {

inline const std::vector<std::string>& bundled_names() {
  static const std::vector<std::string> names{"trivial", "semion", "fibonacci", "ising", "z3", "double_z2"};
  return names;
}

inline std::string data_path(const std::string& name) { return std::string(TUBEALG_TEST_DATA_DIR) + "/" + name + ".json"; }


/// Everything built from one bundled category, constructed once per test binary.
struct Fixture {
  explicit Fixture(const std::string& name)
      : cat(mtc::load_category_file(data_path(name))),
        calc(cat),
        tc(calc),
        md(mtc::compute_modular_data(cat)),
        ctx(tc) {}

  mtc::MTCData cat;
  mtc::Calculus calc;
  tube::TubeCategory tc;
  mtc::ModularData md;
  reps::RepContext ctx;

  int rank() const { return cat.rank(); }
  mtc::Label label(const std::string& n) const { return *cat.ring().find(n); }
};

inline const Fixture& fixture(const std::string& name) {
  static std::map<std::string, std::unique_ptr<Fixture>> cache;
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<Fixture>(name);
  return *slot;
}

inline IntMatrix random_z(std::mt19937_64& rng, int n, int max_entry = 2) {
  std::uniform_int_distribution<int> entry(0, max_entry);
  IntMatrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = entry(rng);
  return z;
}

inline tube::TubeMorphism random_tube_morphism(const tube::TubeCategory& tc, const mtc::Word& x, const mtc::Word& y,
                                               std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(tc.hom_dim(x, y));
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = Complex(g(rng), g(rng));
  return tc.from_coordinates(x, y, v);
}

inline mtc::Morphism random_morphism(const mtc::Calculus& calc, const mtc::Word& x, const mtc::Word& y,
                                     std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  mtc::Morphism m = calc.zero(x, y);
  for (auto& [c, b] : m.blocks)
    for (Eigen::Index i = 0; i < b.rows(); ++i)
      for (Eigen::Index k = 0; k < b.cols(); ++k) b(i, k) = Complex(g(rng), g(rng));
  return m;
}

}  // namespace tubealg::testing

#endif  // TUBEALG_TESTS_SUPPORT_HPP

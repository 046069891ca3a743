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

#ifndef TUBEALG_MODULAR_DATA_HPP
#define TUBEALG_MODULAR_DATA_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "tubealg/consistency.hpp"
#include "tubealg/mtc.hpp"

namespace tubealg::mtc {

class ModularDataError : public Error {
 public:
  using Error::Error;
};

/// Unnormalized modular data: S_{11} = 1 and S^2 = d(C) C.
struct ModularData {
  std::vector<std::string> labels;
  Matrix s_matrix;
  Matrix t_matrix;
  IntMatrix charge_conj;
  Complex lambda;
  Complex global_dim;
  double tolerance = 1e-9;

  int rank() const { return static_cast<int>(s_matrix.rows()); }
};

ModularData compute_modular_data(const MTCData& cat);

/// (ST)^3 = lambda S^2, S^2 = d(C) C and TC = CT.
ConsistencyReport verify_modular_relations(const ModularData& md, const MTCData& cat);
ConsistencyReport verify_modular_relations(const ModularData& md);

/// Standalone file with keys "S", "T" (rows of [re, im]) and optional "labels".
ModularData load_modular_data_string(const std::string& text, double tolerance = 1e-9);
ModularData load_modular_data_file(const std::filesystem::path& path, double tolerance = 1e-9);

}  // namespace tubealg::mtc

#endif  // TUBEALG_MODULAR_DATA_HPP
